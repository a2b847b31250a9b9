"""Small quasi-kernels in split digraphs.

Four guarantees, each carried by a verified certificate:

* ``one_way_qk``      — sink-free one-way input, size <= (n+3)/2 - sqrt(n)
                        (hence <= floor(n/2) for n >= 3);
* ``two_thirds_qk``   — sink-free split input, size <= 2n/3;
* ``complete_split_min_qk`` — complete split biorientation, exact minimum
                        (all sinks if any, otherwise size <= 2);
* ``peel_sinks``      — digraphs with sinks, reduced to a sink-free oracle,
                        size <= alpha * (n + |S| - |N-(S)|) for the sink set S.

Every certificate is re-verified against the original digraph, never
against a reduced or induced copy.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import AbstractSet, Callable, Mapping

from .construct import dominate_two_serf
from .digraph import (
    Digraph,
    PreconditionError,
    QkCertificate,
    SplitDigraph,
    VerificationError,
)

logger = logging.getLogger(__name__)

# Oracle protocol for peel_sinks: given the host digraph and a vertex
# subset inducing a sink-free subdigraph, return a quasi-kernel of that
# subdigraph expressed in host indices.
SinkFreeOracle = Callable[[Digraph, frozenset[int]], AbstractSet[int]]


@dataclass(frozen=True)
class OneWayAssignment:
    """Partition of the independent part by chosen clique out-neighbor.

    ``clique_order[i]`` is the i-th clique vertex (ascending) and
    ``classes[i]`` the independent vertices assigned to it; every class
    member has an arc into its clique vertex, classes are disjoint and
    cover the independent part.
    """

    clique_order: tuple[int, ...]
    classes: tuple[frozenset[int], ...]
    assigned: Mapping[int, int]


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise VerificationError(message)


def assign_one_way(sd: SplitDigraph) -> OneWayAssignment:
    """Assign each independent vertex to its smallest-index clique out-neighbor."""
    d = sd.graph
    order = tuple(sorted(sd.clique))
    pos = {k: idx for idx, k in enumerate(order)}
    buckets: list[set[int]] = [set() for _ in order]
    assigned: dict[int, int] = {}
    for s in sorted(sd.independent):
        outs = d.out_neighbors(s)
        if not outs:
            raise PreconditionError(f"independent vertex {s} is a sink")
        y = min(outs)
        if y not in pos:
            raise PreconditionError(f"independent vertex {s} has an out-arc outside the clique")
        assigned[s] = y
        buckets[pos[y]].add(s)
    return OneWayAssignment(order, tuple(frozenset(b) for b in buckets), assigned)


def _one_way_size_cap(n: int) -> int:
    """Largest integer size with size <= (n+3)/2 - sqrt(n), exactly."""
    s = math.isqrt(4 * n)
    if s * s < 4 * n:
        s += 1
    return (n + 3 - s) // 2


def _check_one_way_bound(n: int, size: int) -> None:
    t = n + 3 - 2 * size
    _require(t >= 0 and t * t >= 4 * n, f"one-way bound violated: size {size} for n={n}")
    if n >= 3:
        _require(size <= n // 2, f"half bound violated: size {size} for n={n}")


def _spanning_tournament(d: Digraph, clique: frozenset[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Tournament on the clique: each digon keeps only its lower->higher arc."""
    order = tuple(sorted(clique))
    pos = {k: idx for idx, k in enumerate(order)}
    arcs = []
    for u in order:
        for w in d.out_neighbors(u):
            if w not in pos:
                continue
            if (w, u) in d.arcs and u > w:
                continue
            arcs.append((pos[u], pos[w]))
    return Digraph(len(order), arcs), order


def one_way_qk(sd: SplitDigraph) -> QkCertificate:
    """Quasi-kernel of size <= (n+3)/2 - sqrt(n) in a sink-free one-way split digraph.

    Works on a spanning tournament of the clique.  A tournament sink is a
    2-serf outright; otherwise one candidate is built per clique vertex
    (its class plus the classes of its tournament out-neighbors, minus its
    in-neighborhood, steered through a dominating 2-serf when the vertex
    itself is not one) and the smallest candidate wins.
    """
    flags = sd.classify()
    if not flags.one_way:
        raise PreconditionError("not one-way: an independent vertex has an in-arc")
    if not flags.sink_free:
        raise PreconditionError("has a sink: use two-thirds via sink peeling")
    d = sd.graph
    n = d.n
    if n == 0:
        return d.certify((), "one-way", bound=Fraction(0))
    t, order = _spanning_tournament(d, sd.clique)
    t_sinks = t.sinks()
    if t_sinks:
        v = order[min(t_sinks)]
        return d.certify((v,), "one-way", bound=Fraction(_one_way_size_cap(n)))
    asg = assign_one_way(sd)
    classes = asg.classes
    nk = len(order)
    two_serf = [t.is_two_serf(i) for i in range(nk)]
    prelim: list[frozenset[int]] = []
    for i in range(nk):
        pool: set[int] = {order[i]}
        for j in t.out_neighbors(i):
            pool |= classes[j]
        prelim.append(frozenset(pool - d.in_neighbors(order[i])))
    candidates: list[frozenset[int]] = []
    for i in range(nk):
        src = i if two_serf[i] else dominate_two_serf(t, i)
        q = prelim[src]
        limit = sum(len(classes[j]) for j in t.out_neighbors(i)) + 1
        _require(len(q) <= limit, f"per-vertex size inequality violated at clique index {i}")
        candidates.append(q)
    best = min(range(nk), key=lambda i: (len(candidates[i]), i))
    cert = d.certify(candidates[best], "one-way", bound=Fraction(_one_way_size_cap(n)))
    _check_one_way_bound(n, cert.size)
    return cert


def two_thirds_qk(sd: SplitDigraph) -> QkCertificate:
    """Quasi-kernel of size <= 2n/3 in any sink-free split digraph.

    A greedy maximal matching of clique-to-independent arcs splits the
    vertices into a matched region A and a remainder B with no arcs from
    B's clique side into the independent part; the better of two
    candidates built around the matching and around B wins.
    """
    flags = sd.classify()
    if not flags.sink_free:
        raise PreconditionError("has a sink: use two-thirds via sink peeling")
    d = sd.graph
    n = d.n
    bound = Fraction(2 * n, 3)
    if n == 0:
        return d.certify((), "two-thirds", bound=bound)
    clique, indep = sd.clique, sd.independent

    matched: set[int] = set()
    i_m: set[int] = set()
    k_m: set[int] = set()
    for t_, h in sorted(a for a in d.arcs if a[0] in clique and a[1] in indep):
        if t_ not in matched and h not in matched:
            matched.update((t_, h))
            k_m.add(t_)
            i_m.add(h)
    i_m_f = frozenset(i_m)
    _require(
        all(
            not (d.out_neighbors(u) & (indep - i_m_f))
            for u in sorted(clique - k_m)
        ),
        "matching not inclusion-maximal",
    )

    n_im = d.in_set(i_m_f)
    nii = d.second_in_set(i_m_f) & indep
    region_a = i_m_f | n_im | nii
    region_b = frozenset(range(n)) - region_a
    if len(region_b) <= 1:
        cert = d.certify(i_m_f, "two-thirds", bound=bound)
        _require(3 * cert.size <= 2 * n, "two-thirds bound violated")
        return cert

    bk = region_b & clique
    bi = region_b & indep
    _require(
        all(not (d.out_neighbors(u) & indep) for u in sorted(bk)),
        "arcs from the remainder clique side into the independent part",
    )

    # candidate around B: a 2-serf of D[B] if its clique side has a sink
    # there, else the one-way construction on D[B]
    b_sinks = frozenset(v for v in region_b if not d.out_neighbors(v) & region_b)
    if b_sinks:
        _require(b_sinks <= bk, "remainder sink outside the clique side")
        q1 = frozenset({min(b_sinks)})
    else:
        sub, old_of_new, _ = sd.induced_split(region_b)
        q1 = frozenset(old_of_new[v] for v in one_way_qk(sub).vertices)
    cand_q = (q1 | i_m_f | nii) - d.in_set(q1)

    # candidate around the matching
    if all(d.out_neighbors(u) & n_im for u in sorted(bk)):
        cand_qp = i_m_f | bi
    else:
        v = min(u for u in sorted(bk) if not d.out_neighbors(u) & n_im)
        _require(
            n_im <= (d.in_neighbors(v) - d.out_neighbors(v)),
            "matched in-neighborhood not dominated by the chosen vertex",
        )
        kt, k_order = d.induced(clique)[:2]
        pos = {k: idx for idx, k in enumerate(k_order)}
        if not kt.is_two_serf(pos[v]):
            v = k_order[dominate_two_serf(kt, pos[v])]
            _require(v in bk, "dominating 2-serf left the remainder clique side")
        cand_qp = frozenset({v}) | (indep - (nii | d.in_neighbors(v)))

    chosen = cand_q if len(cand_q) <= len(cand_qp) else cand_qp
    cert = d.certify(chosen, "two-thirds", bound=bound)
    _require(3 * cert.size <= 2 * n, "two-thirds bound violated")
    return cert


def complete_split_min_qk(sd: SplitDigraph) -> QkCertificate:
    """Minimum quasi-kernel of a complete split biorientation.

    With sinks, the sink set is the unique minimum.  Without, a scan finds
    a 2-serf if one exists; otherwise a pair {x, t} built around a vertex
    x of maximum clique in-degree is a minimum of size two (an exhaustive
    pair scan backs the direct construction up).
    """
    if not sd.classify().complete_split:
        raise PreconditionError("not a complete split biorientation")
    d = sd.graph
    n = d.n
    if n == 0:
        return d.certify((), "complete-split", bound=Fraction(0))
    sinks = d.sinks()
    if sinks:
        return d.certify(sinks, "complete-split", bound=Fraction(len(sinks)))
    for v in range(n):
        if d.is_two_serf(v):
            return d.certify((v,), "complete-split", bound=Fraction(2))

    clique = sd.clique
    x = min(range(n), key=lambda v: (-len(d.in_neighbors(v) & clique), v))
    _require(x in sd.independent, "maximum clique in-degree vertex not independent")
    pick: int | None = None
    fallback_pick: int | None = None
    for t_ in sorted(sd.independent - {x}):
        witnesses = d.out_neighbors(x) & d.in_neighbors(t_)
        if not witnesses:
            continue
        if witnesses - d.in_neighbors(x):
            pick = t_
            break
        if fallback_pick is None:
            fallback_pick = t_
    if pick is None:
        pick = fallback_pick
    if pick is not None and d.is_quasi_kernel((x, pick)):
        return d.certify((x, pick), "complete-split", bound=Fraction(2))

    logger.warning(
        "direct pair construction bypassed for n=%d; falling back to the pair scan", n
    )
    for u in range(n):
        for w in range(u + 1, n):
            if d.is_quasi_kernel((u, w)):
                return d.certify((u, w), "complete-split", bound=Fraction(2))
    raise VerificationError("no quasi-kernel of size <= 2 in a sink-free complete split biorientation")


def peel_sinks(d: Digraph, oracle: SinkFreeOracle, alpha: Fraction) -> QkCertificate:
    """Quasi-kernel of size <= alpha*(n + |S| - |N-(S)|), S the sink set of d.

    Repeatedly removes the current sinks together with their in-neighbors;
    when the residue is sink-free the oracle takes over.  A residue whose
    new sink set outnumbers its in-neighborhood is peeled once more before
    recursing.  The accumulated sink layers join the oracle's result.
    """
    alpha = Fraction(alpha)
    if alpha < Fraction(1, 2):
        raise PreconditionError("alpha must be at least 1/2")
    sinks0 = d.sinks()
    in0 = d.in_set(sinks0)
    acc: set[int] = set()
    remaining = frozenset(range(d.n))
    while True:
        cur_sinks = frozenset(v for v in remaining if not d.out_neighbors(v) & remaining)
        if not cur_sinks:
            acc |= _run_oracle(d, oracle, remaining)
            break
        acc |= cur_sinks
        near = frozenset(
            v for v in remaining - cur_sinks if d.out_neighbors(v) & cur_sinks
        )
        r1 = remaining - cur_sinks - near
        s1 = frozenset(v for v in r1 if not d.out_neighbors(v) & r1)
        if not s1:
            acc |= _run_oracle(d, oracle, r1)
            break
        n1 = frozenset(v for v in r1 - s1 if d.out_neighbors(v) & s1)
        remaining = r1 if len(s1) <= len(n1) else r1 - s1
    bound = alpha * (d.n + len(sinks0) - len(in0))
    cert = d.certify(acc, "peel", bound=bound)
    _require(sinks0 <= cert.vertices, "sink set not contained in the result")
    _require(
        not ((cert.vertices - sinks0) & in0),
        "result contains an in-neighbor of the sink set",
    )
    _require(cert.size <= bound, "peeling bound violated")
    return cert


def _run_oracle(d: Digraph, oracle: SinkFreeOracle, subset: frozenset[int]) -> frozenset[int]:
    if not subset:
        return frozenset()
    q = frozenset(oracle(d, subset))
    _require(q <= subset, "oracle returned vertices outside its subdigraph")
    return q


def split_subset_oracle(
    sd: SplitDigraph,
    solver: Callable[[SplitDigraph], QkCertificate] = two_thirds_qk,
) -> SinkFreeOracle:
    """Adapt a split-digraph solver to the subset-oracle protocol of peel_sinks."""

    def oracle(d: Digraph, subset: frozenset[int]) -> frozenset[int]:
        sub, old_of_new, _ = sd.induced_split(subset)
        cert = solver(sub)
        return frozenset(old_of_new[v] for v in cert.vertices)

    return oracle


def peel_split(
    sd: SplitDigraph,
    alpha: Fraction = Fraction(2, 3),
    solver: Callable[[SplitDigraph], QkCertificate] = two_thirds_qk,
) -> QkCertificate:
    """peel_sinks wired to a split-digraph sink-free solver (two-thirds by default)."""
    return peel_sinks(sd.graph, split_subset_oracle(sd, solver), alpha)
