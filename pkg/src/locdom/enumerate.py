"""Canonical labelling and isomorph-free enumeration of small connected graphs.

Canonical form: over all vertex orders compatible with an equitable colour
refinement (individualise-and-refine search), take the largest
upper-triangle adjacency code. Interchangeable twins are branched on once.

Enumeration grows graphs one vertex at a time: every connected graph on
``n`` vertices has a non-cut vertex, so joining a new vertex to every
non-empty subset of every connected ``(n-1)``-vertex representative reaches
all classes; duplicates are dropped by canonical form. For bipartite graphs
the new vertex attaches to a subset of one colour class only.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, GraphError, bipartition, iter_bits

__all__ = [
    "ENUMERATION_CAP",
    "BIPARTITE_ENUMERATION_CAP",
    "EnumerationCapError",
    "canonical_form",
    "canonical_order",
    "enumerate_connected_graphs",
]

ENUMERATION_CAP = 8
BIPARTITE_ENUMERATION_CAP = 10


class EnumerationCapError(GraphError):
    def __init__(self, n: int, cap: int, what: str):
        super().__init__(
            f"enumeration of {what} on n={n} vertices refused: cap is {cap}; "
            "supply a graph6 stream for larger orders"
        )
        self.cap = cap


def _refine(cells: list[list[int]], adj: tuple[int, ...]) -> list[list[int]]:
    while True:
        for si in range(len(cells)):
            splitter = 0
            for v in cells[si]:
                splitter |= 1 << v
            new = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(bin(adj[v] & splitter).count("1"), []).append(v)
                if len(groups) > 1:
                    split = True
                new.extend(groups[k] for k in sorted(groups))
            if split:
                cells = new
                break
        else:
            return cells


def _code(order: list[int], adj: tuple[int, ...]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _search(g: Graph) -> tuple[int, list[int]]:
    adj = g.adj
    best = [-1, []]

    def twins(u, v):
        return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)

    def visit(cells):
        cells = _refine(cells, adj)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(order, adj)
            if code > best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(twins(u, v) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            visit(cells[:target] + [[v], rest] + cells[target + 1 :])

    if g.n:
        visit([list(range(g.n))])
    return best[0], best[1]


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key ``(n, code)``; equal keys iff isomorphic graphs."""
    if g.n == 0:
        return (0, 0)
    return (g.n, _search(g)[0])


def canonical_order(g: Graph) -> list[int]:
    """Vertex order realising :func:`canonical_form`."""
    return _search(g)[1]


def _relabel(g: Graph, order: list[int]) -> Graph:
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for w in iter_bits(g.adj[v]):
            row |= 1 << pos[w]
        rows[pos[v]] = row
    return Graph(g.n, tuple(rows))


def _extend(g: Graph, neighbourhoods) -> Iterator[Graph]:
    n = g.n
    for nb in neighbourhoods:
        rows = list(g.adj)
        for v in iter_bits(nb):
            rows[v] |= 1 << n
        rows.append(nb)
        yield Graph(n + 1, tuple(rows))


def _subsets(mask: int) -> Iterator[int]:
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


@lru_cache(maxsize=None)
def _level(n: int, bipartite_only: bool) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[tuple[int, int], Graph] = {}
    for parent in _level(n - 1, bipartite_only):
        if bipartite_only:
            bp = bipartition(parent)
            nbs = list(_subsets(bp.u_side)) + list(_subsets(bp.w_side))
        else:
            nbs = _subsets(parent.vertex_mask)
        for child in _extend(parent, nbs):
            key = canonical_form(child)
            if key not in seen:
                seen[key] = child
    # canonical relabelling and sorted order make the stream independent of discovery order
    out = []
    for key in sorted(seen):
        g = seen[key]
        out.append(_relabel(g, canonical_order(g)))
    return tuple(out)


def enumerate_connected_graphs(n: int, bipartite_only: bool = False) -> Iterator[Graph]:
    """Yield one canonically labelled representative per isomorphism class.

    Supports ``1 <= n <= 8`` for all connected graphs and ``n <= 10`` when
    ``bipartite_only`` is set.
    """
    cap = BIPARTITE_ENUMERATION_CAP if bipartite_only else ENUMERATION_CAP
    what = "connected bipartite graphs" if bipartite_only else "connected graphs"
    if n < 1:
        raise GraphError(f"n must be at least 1, got {n}")
    if n > cap:
        raise EnumerationCapError(n, cap, what)
    yield from _level(n, bipartite_only)
