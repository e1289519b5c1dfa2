"""Locating-dominating set predicates and exact solvers.

Vertex sets are accepted as iterables of vertex indices or as bitmasks.
All solvers are exhaustive: target sizes are tried upward from the counting
lower bound and, for each size, subsets are explored in lexicographic order
by a depth-first search with two prunings. A vertex that can no longer
enter the set is abandoned once none of its still-available neighbours
can dominate it, or once it and another such vertex are bound to end up
with the same trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .graph import Graph, GraphError, as_mask, complement, mask_to_tuple

__all__ = [
    "NotLDSetError",
    "LdAnalysis",
    "SolverResult",
    "trace",
    "is_dominating",
    "is_ld_set",
    "dominating_vertex",
    "is_global_ld_set",
    "analyze",
    "counting_lower_bound",
    "ld_number",
    "ld_number_complement",
    "global_ld_number",
    "ld_codes",
    "ld_sets_of_size",
]

VertexSet = Iterable[int] | int


class NotLDSetError(GraphError):
    def __init__(self, s):
        super().__init__(f"{sorted(s)} is not a locating-dominating set")
        self.vertex_set = tuple(sorted(s))


class SolverResult(NamedTuple):
    value: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class LdAnalysis:
    is_dominating: bool
    is_ld: bool
    dominating_vertex: int | None
    is_global: bool


def trace(g: Graph, v: int, s: VertexSet) -> tuple[int, ...]:
    """``N(v) ∩ S`` as a sorted tuple."""
    return mask_to_tuple(g.adj[v] & as_mask(g, s))


def _dominating(adj: Sequence[int], n: int, s: int) -> bool:
    for v in range(n):
        if not s >> v & 1 and not adj[v] & s:
            return False
    return True


def _locating_dominating(adj: Sequence[int], n: int, s: int) -> bool:
    seen = set()
    for v in range(n):
        if s >> v & 1:
            continue
        t = adj[v] & s
        if not t or t in seen:
            return False
        seen.add(t)
    return True


def _dominator(adj: Sequence[int], n: int, s: int) -> int | None:
    for u in range(n):
        if not s >> u & 1 and adj[u] & s == s:
            return u
    return None


def is_dominating(g: Graph, s: VertexSet) -> bool:
    return _dominating(g.adj, g.n, as_mask(g, s))


def is_ld_set(g: Graph, s: VertexSet) -> bool:
    return _locating_dominating(g.adj, g.n, as_mask(g, s))


def dominating_vertex(g: Graph, s: VertexSet) -> int | None:
    """The vertex outside an LD-set ``s`` adjacent to all of ``s``, if any.

    Refuses sets that are not locating-dominating: only for those is the
    dominating vertex guaranteed to be unique.
    """
    mask = as_mask(g, s)
    if not _locating_dominating(g.adj, g.n, mask):
        raise NotLDSetError(mask_to_tuple(mask))
    return _dominator(g.adj, g.n, mask)


def is_global_ld_set(g: Graph, s: VertexSet) -> bool:
    mask = as_mask(g, s)
    return _locating_dominating(g.adj, g.n, mask) and _locating_dominating(complement(g).adj, g.n, mask)


def analyze(g: Graph, s: VertexSet) -> LdAnalysis:
    mask = as_mask(g, s)
    dom = _dominating(g.adj, g.n, mask)
    ld = dom and _locating_dominating(g.adj, g.n, mask)
    dv = _dominator(g.adj, g.n, mask) if ld else None
    return LdAnalysis(is_dominating=dom, is_ld=ld, dominating_vertex=dv, is_global=ld and dv is None)


def counting_lower_bound(n: int) -> int:
    """Smallest ``k`` with ``n - k <= 2**k - 1``: outside traces are distinct non-empty subsets."""
    k = 0
    while n - k > (1 << k) - 1:
        k += 1
    return k


def _search(adjs: Sequence[Sequence[int]], n: int, k: int) -> Iterator[int]:
    """Yield every ``k``-subset (as a mask, lexicographic order) that is an LD-set in all of ``adjs``."""
    if k > n:
        return
    if k == n:
        yield (1 << n) - 1
        return

    def feasible(s: int, nxt: int) -> bool:
        # vertices below nxt that were skipped can never join s
        avail = ((1 << n) - 1) & ~((1 << nxt) - 1)
        for adj in adjs:
            keys = set()
            for v in range(nxt):
                if s >> v & 1:
                    continue
                fixed = adj[v] & s
                pending = adj[v] & avail
                if not fixed and not pending:
                    return False
                key = (fixed, pending)
                if key in keys:
                    return False
                keys.add(key)
        return True

    def rec(s: int, nxt: int, left: int) -> Iterator[int]:
        if left == 0:
            if all(_locating_dominating(adj, n, s) for adj in adjs):
                yield s
            return
        for v in range(nxt, n - left + 1):
            # skipping nxt..v-1 permanently excludes them
            if not feasible(s, v):
                return
            yield from rec(s | 1 << v, v + 1, left - 1)

    yield from rec(0, 0, k)


def ld_sets_of_size(g: Graph, k: int, global_only: bool = False) -> Iterator[tuple[int, ...]]:
    """All LD-sets (or global LD-sets) of exactly ``k`` vertices, in lexicographic order."""
    adjs = [g.adj, complement(g).adj] if global_only else [g.adj]
    for mask in _search(adjs, g.n, k):
        yield mask_to_tuple(mask)


def _minimum(adjs, n: int, start: int, stop: int | None = None) -> SolverResult:
    k = start
    while stop is None or k <= stop:
        for mask in _search(adjs, n, k):
            return SolverResult(k, mask_to_tuple(mask))
        k += 1
    raise AssertionError(f"no solution of size {start}..{stop}")


def ld_number(g: Graph) -> SolverResult:
    """Location-domination number with the lexicographically smallest LD-code."""
    if g.n < 1:
        raise GraphError("location-domination number needs at least one vertex")
    return _minimum([g.adj], g.n, counting_lower_bound(g.n), g.n)


def ld_number_complement(g: Graph) -> int:
    return ld_number(complement(g)).value


def global_ld_number(g: Graph) -> SolverResult:
    """Minimum global LD-set, searched between ``max(λ, λ̄)`` and ``min(λ, λ̄) + 1``."""
    lam = ld_number(g).value
    lam_bar = ld_number_complement(g)
    adjs = [g.adj, complement(g).adj]
    hi = min(min(lam, lam_bar) + 1, g.n)
    return _minimum(adjs, g.n, max(lam, lam_bar), hi)


def ld_codes(g: Graph) -> list[tuple[int, ...]]:
    """Every minimum LD-set of ``g``."""
    k = ld_number(g).value
    return list(ld_sets_of_size(g, k))
