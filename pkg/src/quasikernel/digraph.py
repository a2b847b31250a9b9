"""Immutable digraphs, split partitions, and quasi-kernel predicates.

Vertices are dense integer indices 0..n-1.  Digraphs are loopless and
simple; a digon is stored as two opposite arcs.  Every value here is
immutable after construction and every operation is a pure function, so
shared use across threads is safe.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

Arc = tuple[int, int]


class SplitError(ValueError):
    """A clique/independent bipartition violates the split-digraph invariants."""


class PreconditionError(ValueError):
    """An algorithm was invoked outside its stated preconditions."""


class NotQuasiKernelError(ValueError):
    """A certified set failed the quasi-kernel check.

    ``vertex`` is the first offending vertex in ascending scan order:
    either a set member adjacent to another member, or a vertex with no
    directed path of length <= 2 into the set.
    """

    def __init__(self, message: str, vertex: int):
        super().__init__(message)
        self.vertex = vertex


class VerificationError(RuntimeError):
    """A proof-carrying result failed its own re-verification."""


class Induced(NamedTuple):
    """An induced subdigraph together with its index remap."""

    graph: "Digraph"
    old_of_new: tuple[int, ...]
    new_of_old: dict[int, int]


class InducedSplit(NamedTuple):
    split: "SplitDigraph"
    old_of_new: tuple[int, ...]
    new_of_old: dict[int, int]


@dataclass(frozen=True)
class SplitFlags:
    one_way: bool
    complete_split: bool
    orientation: bool
    sink_free: bool


@dataclass(frozen=True)
class QkCertificate:
    """A quasi-kernel plus a length-<=2 witness path for every outside vertex.

    ``witnesses`` maps each vertex v outside ``vertices`` to a sequence
    (v, q) or (v, w, q) of arcs ending inside ``vertices``.  ``bound`` is
    the size bound the producing algorithm guarantees, when one applies.
    """

    vertices: frozenset[int]
    witnesses: Mapping[int, tuple[int, ...]]
    algorithm: str
    bound: Fraction | None = None

    @property
    def size(self) -> int:
        return len(self.vertices)

    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))

    def check(self, d: "Digraph") -> None:
        """Re-verify against the raw arc set; raise VerificationError on failure."""
        for v in self.vertices:
            if not 0 <= v < d.n:
                raise VerificationError(f"certificate vertex {v} out of range")
            if d.out_neighbors(v) & self.vertices:
                raise VerificationError(f"certificate set not independent at vertex {v}")
        outside = set(range(d.n)) - self.vertices
        if set(self.witnesses) != outside:
            raise VerificationError("witness table does not cover exactly the outside vertices")
        for v, path in self.witnesses.items():
            if not 2 <= len(path) <= 3:
                raise VerificationError(f"witness for {v} has invalid length {len(path)}")
            if path[0] != v or path[-1] not in self.vertices:
                raise VerificationError(f"witness for {v} has wrong endpoints")
            for a, b in zip(path, path[1:]):
                if (a, b) not in d.arcs:
                    raise VerificationError(f"witness arc ({a},{b}) for {v} not in the digraph")
        if self.bound is not None and self.size > self.bound:
            raise VerificationError(f"certificate size {self.size} exceeds its bound {self.bound}")

    def verify(self, d: "Digraph") -> bool:
        try:
            self.check(d)
        except VerificationError:
            return False
        return True


class Digraph:
    """A loopless simple digraph on vertices 0..n-1.

    Arcs are ordered pairs (tail, head).  Neighborhood operators follow
    the quasi-kernel conventions: for a set S, ``in_set`` are the vertices
    outside S with an out-neighbor in S, ``out_set`` those with an
    in-neighbor in S, and ``second_in_set`` those reaching S by a path of
    exactly two arcs.
    """

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        arcset = frozenset((int(t), int(h)) for t, h in arcs)
        out: list[set[int]] = [set() for _ in range(n)]
        inn: list[set[int]] = [set() for _ in range(n)]
        for t, h in arcset:
            if t == h:
                raise ValueError(f"loop arc ({t},{h}) not allowed")
            if not (0 <= t < n and 0 <= h < n):
                raise ValueError(f"arc ({t},{h}) endpoint out of range for n={n}")
            out[t].add(h)
            inn[h].add(t)
        self.n = n
        self.arcs = arcset
        self._out = tuple(frozenset(s) for s in out)
        self._in = tuple(frozenset(s) for s in inn)

    # -- basic accessors ------------------------------------------------

    def out_neighbors(self, v: int) -> frozenset[int]:
        return self._out[v]

    def in_neighbors(self, v: int) -> frozenset[int]:
        return self._in[v]

    def closed_out(self, v: int) -> frozenset[int]:
        return self._out[v] | {v}

    def closed_in(self, v: int) -> frozenset[int]:
        return self._in[v] | {v}

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"

    def _subset(self, s: Iterable[int]) -> frozenset[int]:
        fs = frozenset(s)
        for v in fs:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range for n={self.n}")
        return fs

    # -- neighborhood operators -----------------------------------------

    def sinks(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if not self._out[v])

    def in_set(self, s: Iterable[int]) -> frozenset[int]:
        fs = self._subset(s)
        return frozenset(v for v in range(self.n) if v not in fs and self._out[v] & fs)

    def out_set(self, s: Iterable[int]) -> frozenset[int]:
        fs = self._subset(s)
        return frozenset(v for v in range(self.n) if v not in fs and self._in[v] & fs)

    def second_in_set(self, s: Iterable[int]) -> frozenset[int]:
        fs = self._subset(s)
        first = self.in_set(fs)
        near = fs | first
        return frozenset(
            v for v in range(self.n) if v not in near and self._out[v] & first
        )

    # -- predicates -------------------------------------------------------

    def is_independent(self, s: Iterable[int]) -> bool:
        fs = self._subset(s)
        return all(not (self._out[v] & fs) for v in fs)

    def is_quasi_kernel(self, s: Iterable[int]) -> bool:
        fs = self._subset(s)
        if not self.is_independent(fs):
            return False
        covered = len(fs) + len(self.in_set(fs)) + len(self.second_in_set(fs))
        return covered == self.n

    def is_kernel(self, s: Iterable[int]) -> bool:
        fs = self._subset(s)
        if not self.is_independent(fs):
            return False
        return all(self._out[v] & fs for v in range(self.n) if v not in fs)

    def is_two_serf(self, v: int) -> bool:
        return self.is_quasi_kernel((v,))

    def is_semicomplete(self) -> bool:
        return self.semicomplete_violation() is None

    def semicomplete_violation(self) -> Arc | None:
        """First pair (u, v), u < v, joined by no arc; None if semicomplete."""
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if v not in self._out[u] and v not in self._in[u]:
                    return (u, v)
        return None

    # -- construction helpers ---------------------------------------------

    def induced(self, s: Iterable[int]) -> Induced:
        """Subdigraph on s, with the old<->new index association retained."""
        old_of_new = tuple(sorted(self._subset(s)))
        new_of_old = {old: new for new, old in enumerate(old_of_new)}
        keep = set(old_of_new)
        arcs = [
            (new_of_old[t], new_of_old[h])
            for (t, h) in self.arcs
            if t in keep and h in keep
        ]
        return Induced(Digraph(len(old_of_new), arcs), old_of_new, new_of_old)

    def certify(
        self,
        s: Iterable[int],
        algorithm: str,
        bound: Fraction | None = None,
    ) -> QkCertificate:
        """Build a witness-carrying certificate, or raise NotQuasiKernelError.

        The failure report names the first offending vertex in ascending
        order.  Witness choice is deterministic (smallest usable indices).
        """
        fs = self._subset(s)
        witnesses: dict[int, tuple[int, ...]] = {}
        for v in range(self.n):
            if v in fs:
                if self._out[v] & fs:
                    raise NotQuasiKernelError(
                        f"set not independent: vertex {v} has an arc into the set", v
                    )
                continue
            direct = self._out[v] & fs
            if direct:
                witnesses[v] = (v, min(direct))
                continue
            path: tuple[int, ...] | None = None
            for w in sorted(self._out[v]):
                hit = self._out[w] & fs
                if hit:
                    path = (v, w, min(hit))
                    break
            if path is None:
                raise NotQuasiKernelError(
                    f"vertex {v} has no directed path of length <= 2 into the set", v
                )
            witnesses[v] = path
        return QkCertificate(fs, witnesses, algorithm, bound)


class SplitDigraph:
    """A digraph plus a validated clique/independent bipartition.

    Invariants: the parts partition the vertex set, every unordered pair
    inside the clique part is joined by at least one arc, and no arc has
    both endpoints in the independent part.
    """

    __slots__ = ("graph", "clique", "independent")

    def __init__(self, graph: Digraph, clique: Iterable[int], independent: Iterable[int]):
        k = frozenset(clique)
        i = frozenset(independent)
        for v in k | i:
            if not 0 <= v < graph.n:
                raise SplitError(f"part member {v} out of range for n={graph.n}")
        if k & i or len(k) + len(i) != graph.n:
            raise SplitError("clique and independent parts do not partition the vertex set")
        ks = sorted(k)
        for a_idx, u in enumerate(ks):
            for v in ks[a_idx + 1 :]:
                if v not in graph.out_neighbors(u) and v not in graph.in_neighbors(u):
                    raise SplitError(f"missing clique adjacency ({u},{v})")
        for t, h in sorted(graph.arcs):
            if t in i and h in i:
                raise SplitError(f"arc inside independent part ({t},{h})")
        self.graph = graph
        self.clique = k
        self.independent = i

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SplitDigraph):
            return NotImplemented
        return self.graph == other.graph and self.clique == other.clique

    def __hash__(self) -> int:
        return hash((self.graph, self.clique))

    def __repr__(self) -> str:
        return (
            f"SplitDigraph(n={self.graph.n}, |K|={len(self.clique)},"
            f" |I|={len(self.independent)})"
        )

    def classify(self) -> SplitFlags:
        g = self.graph
        one_way = all(not g.in_neighbors(s) for s in self.independent)
        complete = all(
            self.clique <= (g.out_neighbors(s) | g.in_neighbors(s))
            for s in self.independent
        )
        orientation = all((h, t) not in g.arcs for (t, h) in g.arcs)
        return SplitFlags(
            one_way=one_way,
            complete_split=complete,
            orientation=orientation,
            sink_free=not g.sinks(),
        )

    def induced_split(self, s: Iterable[int]) -> InducedSplit:
        sub, old_of_new, new_of_old = self.graph.induced(s)
        keep = set(old_of_new)
        k = [new_of_old[v] for v in self.clique & keep]
        i = [new_of_old[v] for v in self.independent & keep]
        return InducedSplit(SplitDigraph(sub, k, i), old_of_new, new_of_old)


def check_split(graph: Digraph, clique: Iterable[int], independent: Iterable[int]) -> SplitDigraph:
    """Validate a given bipartition, returning the SplitDigraph or raising SplitError."""
    return SplitDigraph(graph, clique, independent)
