"""Block decomposition, cactus recognition and cactus counting identities."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, GraphError, bipartition, make_graph

__all__ = [
    "NotCactusError",
    "CactusStats",
    "blocks",
    "is_cactus",
    "cactus_stats",
    "tightness_check",
    "random_cactus",
]


class NotCactusError(GraphError):
    pass


def blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Biconnected components as sorted edge lists of ``(u, v)`` with ``u < v``.

    Iterative Hopcroft-Tarjan. Isolated vertices contribute no block.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: list[list[tuple[int, int]]] = []
    time = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = time
        time += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] < 0:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = time
                    time += 1
                    stack.append((v, u, iter(g.neighbors(v))))
                    advanced = True
                    break
                if v != parent and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append((min(e), max(e)))
                        if e == (parent, u):
                            break
                    out.append(sorted(block))
    return out


def _block_kind(block: list[tuple[int, int]]) -> str:
    if len(block) == 1:
        return "edge"
    verts = {x for e in block for x in e}
    # a 2-connected block with as many edges as vertices is a cycle
    return "cycle" if len(verts) == len(block) else "other"


def is_cactus(h: Graph) -> bool:
    """Every block of every component is a single edge or a single cycle."""
    return all(_block_kind(b) != "other" for b in blocks(h))


@dataclass(frozen=True)
class CactusStats:
    cc: int
    cy: int
    ex: int
    order: int
    size: int

    def euler_identity(self) -> bool:
        return self.order == self.size - self.cy + self.cc

    def excess_identity(self) -> bool:
        # |V| = 3/4 |E| + 1/4 ex + cc, scaled by 4
        return 4 * self.order == 3 * self.size + self.ex + 4 * self.cc

    def lower_bound(self) -> bool:
        return 4 * self.order >= 3 * self.size + 4


def cactus_stats(h: Graph) -> CactusStats:
    bl = blocks(h)
    kinds = [_block_kind(b) for b in bl]
    if "other" in kinds:
        raise NotCactusError("graph has a block that is neither an edge nor a cycle")
    cc = len(h.components())
    cy = kinds.count("cycle")
    size = h.num_edges
    if cy != size - h.n + cc:
        raise AssertionError(f"cycle-block count {cy} disagrees with cyclomatic number {size - h.n + cc}")
    return CactusStats(cc=cc, cy=cy, ex=size - 4 * cy, order=h.n, size=size)


def tightness_check(h: Graph) -> bool:
    """Whether ``4|V| = 3|E| + 4`` for a connected bipartite cactus."""
    if not h.is_connected():
        raise GraphError("tightness check needs a connected graph")
    if not is_cactus(h):
        raise NotCactusError("tightness check needs a cactus")
    if bipartition(h) is None:
        raise GraphError("tightness check needs a bipartite graph")
    return 4 * h.n == 3 * h.num_edges + 4


def random_cactus(
    rng: random.Random,
    n_blocks: int,
    bipartite: bool = False,
    components: int = 1,
    cycle_lengths: tuple[int, ...] | None = None,
    bridge_prob: float = 0.3,
) -> Graph:
    """Glue random blocks onto random existing vertices.

    Each component starts from a single vertex; each block is a bridge or a
    cycle through an existing vertex. With ``bipartite`` only even cycles are
    used. ``components`` disjoint pieces share the block budget.
    """
    if cycle_lengths is None:
        cycle_lengths = (4, 6, 8) if bipartite else (3, 4, 5, 6, 7)
    if bipartite and any(c % 2 for c in cycle_lengths):
        raise ValueError("bipartite cactus needs even cycle lengths")
    edges: list[tuple[int, int]] = []
    n = 0
    for c in range(components):
        base = n
        n += 1
        share = n_blocks // components + (1 if c < n_blocks % components else 0)
        for _ in range(share):
            anchor = rng.randrange(base, n)
            if rng.random() < bridge_prob:
                edges.append((anchor, n))
                n += 1
            else:
                length = rng.choice(cycle_lengths)
                ring = [anchor] + list(range(n, n + length - 1))
                n += length - 1
                edges += [(ring[i], ring[(i + 1) % length]) for i in range(length)]
    return make_graph(n, edges)
