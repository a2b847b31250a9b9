"""Shared fixtures, independent re-implementations used as oracles, and
hypothesis strategies.

The checkers here deliberately work from the raw arc set (arc-scan BFS,
naive domination) so they share no code path with the package's own
predicates.
"""
from __future__ import annotations

import random

from hypothesis import strategies as st

from quasikernel import Digraph, SplitDigraph


def qk_by_bfs(d: Digraph, s) -> bool:
    """Independent quasi-kernel check: arc-scan independence + depth-2 BFS."""
    members = set(s)
    for t, h in d.arcs:
        if t in members and h in members:
            return False
    for v in range(d.n):
        if v in members:
            continue
        frontier = {v}
        found = False
        for _ in range(2):
            frontier = {h for (t, h) in d.arcs if t in frontier}
            if frontier & members:
                found = True
                break
        if not found:
            return False
    return True


def dominating_by_scan(d: Digraph, s) -> bool:
    members = set(s)
    for v in range(d.n):
        if v in members:
            continue
        if not any(t == v and h in members for (t, h) in d.arcs):
            return False
    return True


def strongly_connected(d: Digraph) -> bool:
    if d.n <= 1:
        return True

    def reach(start: int, forward: bool) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            nbrs = d.out_neighbors(v) if forward else d.in_neighbors(v)
            for w in nbrs:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    return len(reach(0, True)) == d.n and len(reach(0, False)) == d.n


def random_digraph(seed: int, max_n: int = 12) -> Digraph:
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    p = rng.uniform(0.05, 0.5)
    arcs = [(a, b) for a in range(n) for b in range(n) if a != b and rng.random() < p]
    return Digraph(n, arcs)


def random_semicomplete(seed: int, max_n: int = 10) -> Digraph:
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    p_digon = rng.uniform(0.0, 0.5)
    arcs = []
    for a in range(n):
        for b in range(a + 1, n):
            arcs.append((a, b) if rng.random() < 0.5 else (b, a))
            if rng.random() < p_digon:
                arcs.append((arcs[-1][1], arcs[-1][0]))
    return Digraph(n, arcs)


def relabel(d: Digraph, perm: list[int]) -> Digraph:
    return Digraph(d.n, [(perm[t], perm[h]) for (t, h) in d.arcs])


def relabel_split(sd: SplitDigraph, perm: list[int]) -> SplitDigraph:
    return SplitDigraph(
        relabel(sd.graph, perm),
        [perm[v] for v in sd.clique],
        [perm[v] for v in sd.independent],
    )


# ---------------------------------------------------------------------------
# hypothesis strategies


@st.composite
def digraphs(draw, max_n: int = 7) -> Digraph:
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    if not pairs:
        return Digraph(n)
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Digraph(n, arcs)


@st.composite
def digraphs_with_subsets(draw, max_n: int = 7) -> tuple[Digraph, frozenset[int]]:
    d = draw(digraphs(max_n=max_n))
    subset = draw(st.frozensets(st.integers(0, max(d.n - 1, 0)), max_size=d.n)) if d.n else frozenset()
    return d, subset


@st.composite
def semicomplete(draw, min_n: int = 1, max_n: int = 7) -> Digraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    arcs: list[tuple[int, int]] = []
    for a in range(n):
        for b in range(a + 1, n):
            kind = draw(st.integers(0, 2))
            if kind in (0, 2):
                arcs.append((a, b))
            if kind in (1, 2):
                arcs.append((b, a))
    return Digraph(n, arcs)


@st.composite
def split_digraphs(draw, max_k: int = 4, max_i: int = 5) -> SplitDigraph:
    nk = draw(st.integers(0, max_k))
    ni = draw(st.integers(0, max_i))
    arcs: list[tuple[int, int]] = []
    for a in range(nk):
        for b in range(a + 1, nk):
            kind = draw(st.integers(0, 2))
            if kind in (0, 2):
                arcs.append((a, b))
            if kind in (1, 2):
                arcs.append((b, a))
    for k in range(nk):
        for s in range(nk, nk + ni):
            kind = draw(st.integers(0, 3))
            if kind in (1, 3):
                arcs.append((k, s))
            if kind in (2, 3):
                arcs.append((s, k))
    return SplitDigraph(Digraph(nk + ni, arcs), range(nk), range(nk, nk + ni))
