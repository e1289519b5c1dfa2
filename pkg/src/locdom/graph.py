"""Simple undirected graphs on dense vertex indices, stored as adjacency bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "GraphError",
    "InvalidEdgeError",
    "DisconnectedGraphError",
    "Graph",
    "Bipartition",
    "make_graph",
    "complement",
    "bipartition",
    "as_mask",
    "mask_to_tuple",
    "popcount",
    "iter_bits",
    "read_edge_list",
    "write_edge_list",
]


class GraphError(ValueError):
    """Base class for invalid graph input."""


class InvalidEdgeError(GraphError):
    def __init__(self, pair, reason):
        super().__init__(f"invalid edge {pair!r}: {reason}")
        self.pair = pair


class DisconnectedGraphError(GraphError):
    def __init__(self, u, v):
        super().__init__(f"graph is disconnected: vertices {u} and {v} lie in different components")
        self.vertices = (u, v)


def popcount(x: int) -> int:
    return bin(x).count("1")


def mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[u]`` is an int bitmask whose bit ``v`` is set iff ``uv`` is an edge.
    Instances are immutable; build them with :func:`make_graph` or the
    family generators rather than by hand.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {u} references a vertex outside 0..{self.n - 1}")
            if row >> u & 1:
                raise InvalidEdgeError((u, u), "self-loop")
            r = row
            while r:
                low = r & -r
                v = low.bit_length() - 1
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
                r ^= low

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return mask_to_tuple(self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.neighbors(u) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def components(self) -> list[int]:
        """Connected components as vertex masks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = frontier = 1 << start
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= self.adj[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in self.neighbors(v):
                if w in index:
                    row |= 1 << index[w]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def as_mask(g: Graph, s: Iterable[int] | int) -> int:
    """Normalize a vertex collection (or an existing bitmask) to a bitmask over ``g``."""
    if isinstance(s, int):
        mask = s
    else:
        mask = 0
        for v in s:
            if not isinstance(v, int) or not 0 <= v < g.n:
                raise GraphError(f"vertex {v!r} is not in 0..{g.n - 1}")
            mask |= 1 << v
    if mask < 0 or mask & ~g.vertex_mask:
        raise GraphError(f"vertex set {mask:#x} is not a subset of 0..{g.n - 1}")
    return mask


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdgeError(tuple(pair), f"endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidEdgeError(tuple(pair), "self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.adj)))


@dataclass(frozen=True)
class Bipartition:
    """Stable sets ``(U, W)`` of a connected bipartite graph with ``|U| <= |W|``."""

    u_side: int
    w_side: int

    @property
    def r(self) -> int:
        return popcount(self.u_side)

    @property
    def s(self) -> int:
        return popcount(self.w_side)

    @property
    def u_vertices(self) -> tuple[int, ...]:
        return mask_to_tuple(self.u_side)

    @property
    def w_vertices(self) -> tuple[int, ...]:
        return mask_to_tuple(self.w_side)


def bipartition(g: Graph) -> Bipartition | None:
    """2-colour a connected graph; ``None`` if it has an odd cycle.

    On equal side sizes ``U`` is the side containing vertex 0.
    """
    comps = g.components()
    if len(comps) > 1:
        raise DisconnectedGraphError(mask_to_tuple(comps[0])[0], mask_to_tuple(comps[1])[0])
    if g.n == 0:
        return Bipartition(0, 0)
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.neighbors(u):
            if color[v] < 0:
                color[v] = 1 - color[u]
                stack.append(v)
            elif color[v] == color[u]:
                return None
    a = sum(1 << v for v in range(g.n) if color[v] == 0)
    b = g.vertex_mask & ~a
    if popcount(b) < popcount(a):
        a, b = b, a
    return Bipartition(a, b)


def read_edge_list(lines: Iterable[str]) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines ``u v``."""
    rows = [ln.split() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    n, m = int(rows[0][0]), int(rows[0][1])
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"edge list header announces {m} edges, found {len(body)}")
    edges = []
    for i, row in enumerate(body, start=2):
        if len(row) != 2:
            raise GraphError(f"line {i}: expected 'u v', got {' '.join(row)!r}")
        edges.append((int(row[0]), int(row[1])))
    return make_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
