"""Instance generators and the dominating-set-to-quasi-kernel reduction.

Two extremal split families whose smallest quasi-kernel approaches half
the vertices, two seeded random models used as test corpora, and the
parameterized-hardness gadget with both solution maps.  All generators
are deterministic for a given parameter tuple.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from .digraph import Arc, Digraph, PreconditionError, SplitDigraph, VerificationError
from .exact import is_dominating


class GenerationError(ValueError):
    """Requested generator options cannot be satisfied."""


# ---------------------------------------------------------------------------
# extremal families


def _family_sizes(n: int) -> tuple[int, int]:
    if n < 1:
        raise ValueError("family parameter n must be >= 1")
    kc = 2 * n + 1
    return kc, kc * n


def family_labels(n: int) -> tuple[str, ...]:
    """Vertex labels of the extremal families: k's first, then s's row-major."""
    kc, ic = _family_sizes(n)
    labels = [f"k{i}" for i in range(kc)]
    labels += [f"s{i}_{j}" for i in range(kc) for j in range(1, n + 1)]
    return tuple(labels)


def gen_dn(n: int) -> SplitDigraph:
    """One-way circulant family on 2n^2+3n+1 vertices.

    Clique vertex k_i points to the next n clique vertices (indices modulo
    2n+1); each of the n independent vertices s_i1..s_in points only to
    k_i.  The smallest quasi-kernel has n^2+1 vertices, asymptotically
    half of the total.
    """
    kc, _ = _family_sizes(n)

    def s_index(i: int, j: int) -> int:
        return kc + i * n + (j - 1)

    arcs: list[Arc] = []
    for i in range(kc):
        for j in range(1, n + 1):
            arcs.append((i, (i + j) % kc))
            arcs.append((s_index(i, j), i))
    g = Digraph(kc + kc * n, arcs)
    return SplitDigraph(g, range(kc), range(kc, g.n))


def gen_dpn(n: int) -> SplitDigraph:
    """Strongly connected variant of gen_dn: k_0 additionally points to
    every independent vertex s_ij with i >= 1.  Not one-way."""
    base = gen_dn(n)
    kc, _ = _family_sizes(n)
    extra = [(0, kc + i * n + (j - 1)) for i in range(1, kc) for j in range(1, n + 1)]
    g = Digraph(base.graph.n, base.graph.arcs | frozenset(extra))
    return SplitDigraph(g, base.clique, base.independent)


# ---------------------------------------------------------------------------
# random corpora


def _orient_pair(rng: random.Random, a: int, b: int, p_digon: float) -> list[Arc]:
    arcs = [(a, b)] if rng.random() < 0.5 else [(b, a)]
    if rng.random() < p_digon:
        arcs.append((arcs[0][1], arcs[0][0]))
    return arcs


def gen_random_split(
    seed: int,
    nk: int,
    ni: int,
    p_k_to_i: float = 0.25,
    p_i_to_k: float = 0.25,
    p_digon_k: float = 0.15,
    one_way: bool = False,
    sink_free: bool = False,
) -> SplitDigraph:
    """Seeded random split digraph on clique 0..nk-1 and independent part nk..nk+ni-1.

    With sink_free, the clique is seeded with a Hamiltonian cycle (nk >= 3),
    a digon (nk == 2) or a forced arc into the independent part (nk == 1,
    requires ni >= 1 and not one_way), and every independent vertex gets a
    forced out-arc into the clique.  one_way suppresses clique-to-independent
    arcs.  Raises GenerationError on unsatisfiable combinations.
    """
    if nk < 0 or ni < 0:
        raise ValueError("part sizes must be nonnegative")
    if sink_free:
        if nk == 0 and ni > 0:
            raise GenerationError("sink-free impossible: an isolated independent vertex is a sink")
        if nk == 1 and (one_way or ni == 0):
            raise GenerationError("sink-free impossible: the lone clique vertex has no legal out-arc")
    rng = random.Random(seed)
    indep = range(nk, nk + ni)
    arcs: set[Arc] = set()

    forced_cycle: set[frozenset[int]] = set()
    if sink_free and nk >= 3:
        for a in range(nk):
            b = (a + 1) % nk
            arcs.add((a, b))
            forced_cycle.add(frozenset((a, b)))
            if rng.random() < p_digon_k:
                arcs.add((b, a))
    if sink_free and nk == 2:
        arcs.update(((0, 1), (1, 0)))
        forced_cycle.add(frozenset((0, 1)))
    for a in range(nk):
        for b in range(a + 1, nk):
            if frozenset((a, b)) in forced_cycle:
                continue
            arcs.update(_orient_pair(rng, a, b, p_digon_k))
    if sink_free and nk == 1:
        arcs.add((0, nk))
    if sink_free:
        for s in indep:
            arcs.add((s, rng.randrange(nk)))
    for k in range(nk):
        for s in indep:
            if not one_way and rng.random() < p_k_to_i:
                arcs.add((k, s))
            if rng.random() < p_i_to_k:
                arcs.add((s, k))

    sd = SplitDigraph(Digraph(nk + ni, arcs), range(nk), indep)
    flags = sd.classify()
    if one_way and not flags.one_way:
        raise GenerationError("construction failed to be one-way")
    if sink_free and not flags.sink_free:
        raise GenerationError("construction failed to be sink-free")
    return sd


def gen_random_complete_split(
    seed: int,
    nk: int,
    ni: int,
    p_digon: float = 0.15,
    sink_free: bool = False,
) -> SplitDigraph:
    """Seeded random biorientation of a complete split graph.

    Every clique pair and every clique-independent pair is adjacent; each
    adjacency gets a random orientation plus a digon with probability
    p_digon.  sink_free resamples the incident orientations of offending
    vertices, up to 100 passes, then raises GenerationError.
    """
    if nk < 0 or ni < 0:
        raise ValueError("part sizes must be nonnegative")
    rng = random.Random(seed)
    n = nk + ni
    pairs = [(a, b) for a in range(nk) for b in range(a + 1, nk)]
    pairs += [(k, s) for k in range(nk) for s in range(nk, n)]
    oriented: dict[tuple[int, int], tuple[Arc, ...]] = {
        pair: tuple(_orient_pair(rng, *pair, p_digon)) for pair in pairs
    }

    def build() -> SplitDigraph:
        arcs = [a for arcset in oriented.values() for a in arcset]
        return SplitDigraph(Digraph(n, arcs), range(nk), range(nk, n))

    sd = build()
    if sink_free:
        attempts = 0
        while sd.graph.sinks():
            if attempts >= 100:
                raise GenerationError("resampling cap exceeded while enforcing sink-freeness")
            attempts += 1
            for v in sorted(sd.graph.sinks()):
                for pair in pairs:
                    if v in pair:
                        oriented[pair] = tuple(_orient_pair(rng, *pair, p_digon))
            sd = build()
    return sd


# ---------------------------------------------------------------------------
# hardness reduction


@dataclass(frozen=True)
class ReductionArtifact:
    """The dominating-set gadget: a split host digraph plus name maps.

    Host vertex layout (all offsets derived from source_n, source_m and
    b = 2q+3): the apex s, then one s1 vertex per source vertex, b s2
    vertices, one k1 vertex per source arc (in arc_order), and b k2
    vertices.  ``labels`` maps names like "s1_3" or "k1_0_2" to host
    indices; ``names`` is the inverse.
    """

    host: SplitDigraph
    source: Digraph
    q: int
    b: int
    source_n: int
    source_m: int
    labels: Mapping[str, int]
    names: tuple[str, ...]
    arc_order: tuple[Arc, ...]

    @property
    def s_index(self) -> int:
        return 0

    def s1_index(self, v: int) -> int:
        return 1 + v

    def s2_index(self, i: int) -> int:
        return 1 + self.source_n + (i - 1)

    def k1_index(self, arc: Arc) -> int:
        return 1 + self.source_n + self.b + self.arc_order.index(arc)

    def k2_index(self, i: int) -> int:
        return 1 + self.source_n + self.b + self.source_m + (i - 1)


def reduce_dds_to_qk(d: Digraph, q: int) -> ReductionArtifact:
    """Build the gadget host: d has a dominating set of size <= q iff the
    host has a quasi-kernel of size <= q+1.

    The host is an orientation of a split graph with n+m+2b+1 vertices and
    C(m+b,2)+3m+2b arcs, b = 2q+3; both counts are asserted, not trusted.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    n, m = d.n, len(d.arcs)
    b = 2 * q + 3
    arc_order = tuple(sorted(d.arcs))

    s = 0
    s1 = {v: 1 + v for v in range(n)}
    s2 = {i: 1 + n + (i - 1) for i in range(1, b + 1)}
    k1 = {a: 1 + n + b + r for r, a in enumerate(arc_order)}
    k2 = {i: 1 + n + b + m + (i - 1) for i in range(1, b + 1)}
    total = n + m + 2 * b + 1

    arcs: list[Arc] = []
    arcs += [(s, k1[a]) for a in arc_order]
    arcs += [(k2[i], s) for i in range(1, b + 1)]
    for (v, w) in arc_order:
        arcs.append((s1[v], k1[(v, w)]))
        arcs.append((k1[(v, w)], s1[w]))
    arcs += [(s2[i], k2[i]) for i in range(1, b + 1)]
    for r, a in enumerate(arc_order):
        for a2 in arc_order[r + 1 :]:
            arcs.append((k1[a], k1[a2]))
    arcs += [(k1[a], k2[i]) for a in arc_order for i in range(1, b + 1)]
    for i in range(1, b + 1):
        for j in range(i + 1, b + 1):
            if i % 2 == j % 2:
                arcs.append((k2[i], k2[j]))
            else:
                arcs.append((k2[j], k2[i]))

    names = ["s"]
    names += [f"s1_{v}" for v in range(n)]
    names += [f"s2_{i}" for i in range(1, b + 1)]
    names += [f"k1_{v}_{w}" for (v, w) in arc_order]
    names += [f"k2_{i}" for i in range(1, b + 1)]

    clique = sorted(k1.values()) + sorted(k2.values())
    indep = [s] + sorted(s1.values()) + sorted(s2.values())
    host = SplitDigraph(Digraph(total, arcs), clique, indep)

    if host.graph.n != n + m + 2 * b + 1:
        raise VerificationError("gadget vertex count formula violated")
    if len(host.graph.arcs) != math.comb(m + b, 2) + 3 * m + 2 * b:
        raise VerificationError("gadget arc count formula violated")
    if not host.classify().orientation:
        raise VerificationError("gadget is not an orientation")

    return ReductionArtifact(
        host=host,
        source=d,
        q=q,
        b=b,
        source_n=n,
        source_m=m,
        labels={name: idx for idx, name in enumerate(names)},
        names=tuple(names),
        arc_order=arc_order,
    )


def lift_domset(art: ReductionArtifact, dom: Iterable[int]) -> frozenset[int]:
    """Map a dominating set of the source (size <= q) to a verified
    quasi-kernel of the host of size |dom| + 1."""
    dom_f = frozenset(dom)
    if len(dom_f) > art.q:
        raise PreconditionError(f"dominating set larger than q={art.q}")
    if not is_dominating(art.source, dom_f):
        raise PreconditionError("not a dominating set of the source")
    q_set = frozenset({art.s_index} | {art.s1_index(v) for v in dom_f})
    if not art.host.graph.is_quasi_kernel(q_set):
        raise VerificationError("lifted set is not a quasi-kernel of the host")
    return q_set


def project_qk(art: ReductionArtifact, qk: Iterable[int]) -> frozenset[int]:
    """Map a quasi-kernel of the host (size <= q+1) to a verified
    dominating set of the source of size <= q."""
    qk_f = frozenset(qk)
    if len(qk_f) > art.q + 1:
        raise PreconditionError(f"quasi-kernel larger than q+1={art.q + 1}")
    if not art.host.graph.is_quasi_kernel(qk_f):
        raise PreconditionError("not a quasi-kernel of the host")
    dom = frozenset(v for v in range(art.source_n) if art.s1_index(v) in qk_f)
    if len(dom) > art.q:
        raise VerificationError("projected set larger than q")
    if not is_dominating(art.source, dom):
        raise VerificationError("projected set is not dominating")
    return dom
