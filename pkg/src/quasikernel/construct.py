"""Constructions that work in every digraph: peeling quasi-kernels and 2-serfs.

All outputs are post-verified before they are returned; a latent bug
surfaces as a VerificationError instead of a silently wrong answer.
"""
from __future__ import annotations

from .digraph import Digraph, PreconditionError, VerificationError


def quasi_kernel_rooted(d: Digraph, r: int) -> frozenset[int]:
    """Quasi-kernel Q with r in Q or an out-neighbor of r in Q.

    Peels closed in-neighborhoods starting at r (then at the smallest
    remaining index) and rebuilds the quasi-kernel backwards: a peeled
    root joins the set unless one of its out-neighbors already made it.
    Iterative, so the stack does not grow with the vertex count.
    """
    if not 0 <= r < d.n:
        raise ValueError(f"root {r} out of range for n={d.n}")
    order: list[int] = []
    remaining = set(range(d.n))
    root = r
    while remaining:
        order.append(root)
        remaining -= d.closed_in(root)
        if remaining:
            root = min(remaining)
    q: set[int] = set()
    for v in reversed(order):
        if not d.out_neighbors(v) & q:
            q.add(v)
    result = frozenset(q)
    if not d.is_quasi_kernel(result):
        raise VerificationError("rooted construction produced a non-quasi-kernel")
    if r not in result and not d.out_neighbors(r) & result:
        raise VerificationError("rooted construction lost the root property")
    return result


def quasi_kernel_cl(d: Digraph) -> frozenset[int]:
    """Quasi-kernel of an arbitrary digraph (rooted at the smallest index)."""
    if d.n == 0:
        return frozenset()
    return quasi_kernel_rooted(d, 0)


def _require_semicomplete(t: Digraph) -> None:
    pair = t.semicomplete_violation()
    if pair is not None:
        raise PreconditionError(f"not semicomplete: vertices {pair[0]} and {pair[1]} are non-adjacent")


def two_serf_semicomplete(t: Digraph) -> int:
    """A 2-serf of a semicomplete digraph: a vertex every vertex reaches in <= 2 arcs.

    A maximum in-degree vertex works (smallest index on ties); it is a
    king of the reversed digraph.
    """
    _require_semicomplete(t)
    if t.n == 0:
        raise PreconditionError("empty digraph has no 2-serf")
    best = min(range(t.n), key=lambda v: (-len(t.in_neighbors(v)), v))
    if not t.is_two_serf(best):
        raise VerificationError(f"max in-degree vertex {best} is not a 2-serf")
    return best


def dominate_two_serf(t: Digraph, v: int) -> int:
    """For a non-2-serf v of a semicomplete digraph, a 2-serf u with N-[v] <= N-(u).

    u is found as a 2-serf of the subdigraph induced by the vertices that
    cannot reach v within two arcs; both postconditions are re-verified.
    """
    _require_semicomplete(t)
    if not 0 <= v < t.n:
        raise ValueError(f"vertex {v} out of range for n={t.n}")
    if t.is_two_serf(v):
        raise PreconditionError(f"vertex {v} is already a 2-serf")
    rest = frozenset(range(t.n)) - t.closed_in(v) - t.second_in_set((v,))
    sub, old_of_new, _ = t.induced(rest)
    u = old_of_new[two_serf_semicomplete(sub)]
    if not t.is_two_serf(u):
        raise VerificationError(f"candidate {u} is not a 2-serf of the full digraph")
    if not t.closed_in(v) <= t.in_neighbors(u):
        raise VerificationError(f"closed in-neighborhood of {v} not dominated by {u}")
    return u
