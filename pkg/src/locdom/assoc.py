"""The edge-labelled graph attached to an LD-set ``S``.

Its vertices are ``V \\ S`` plus an artificial vertex ``z`` whose trace is
empty. Two vertices are joined when their traces on ``S`` differ in exactly
one element, which becomes the edge label. Levels are trace sizes.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .graph import Bipartition, Graph, GraphError, as_mask, iter_bits, make_graph, mask_to_tuple
from .solver import NotLDSetError, is_ld_set

__all__ = [
    "AssocGraph",
    "PropertyReport",
    "HSubgraph",
    "LabelMultiplicityError",
    "build_associated",
    "check_properties",
    "check_walk",
    "check_monotone_path",
    "edges_with_label",
    "select_H",
    "random_rule",
    "sample_trails",
    "monotone_paths",
    "degree_of_z",
    "has_degree1_W_vertex",
    "to_dot",
]

Edge = tuple[int, int, int]


class LabelMultiplicityError(GraphError):
    def __init__(self, label: int, count: int):
        super().__init__(f"label {label} carries {count} edge(s); at least two are required")
        self.label = label


@dataclass(frozen=True)
class AssocGraph:
    """``vertices`` lists ``V \\ S`` in increasing order followed by ``z``.

    ``z`` is represented by the integer ``source_order`` (one past the last
    source vertex). Edges are ``(x, y, label)`` with ``x < y``, sorted.
    """

    source_order: int
    s_mask: int
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    traces: dict[int, int] = field(compare=False)

    @property
    def z(self) -> int:
        return self.source_order

    @property
    def labels(self) -> tuple[int, ...]:
        return mask_to_tuple(self.s_mask)

    def level(self, x: int) -> int:
        return bin(self.traces[x]).count("1")

    def incident(self, x: int) -> list[Edge]:
        return [e for e in self.edges if x in (e[0], e[1])]

    def degree(self, x: int) -> int:
        return sum(1 for e in self.edges if x in (e[0], e[1]))

    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        """``x -> [(neighbour, label), ...]``."""
        out: dict[int, list[tuple[int, int]]] = {x: [] for x in self.vertices}
        for x, y, lab in self.edges:
            out[x].append((y, lab))
            out[y].append((x, lab))
        return out


def build_associated(g: Graph, s: Iterable[int] | int) -> AssocGraph:
    mask = as_mask(g, s)
    if not g.is_connected():
        raise GraphError("associated graph is defined for connected graphs only")
    if not is_ld_set(g, mask):
        raise NotLDSetError(mask_to_tuple(mask))
    outside = [v for v in range(g.n) if not mask >> v & 1]
    z = g.n
    vertices = tuple(outside) + (z,)
    traces = {v: g.adj[v] & mask for v in outside}
    traces[z] = 0
    edges = []
    for i, x in enumerate(vertices):
        for y in vertices[i + 1 :]:
            diff = traces[x] ^ traces[y]
            if diff and not diff & (diff - 1):
                edges.append((x, y, diff.bit_length() - 1))
    return AssocGraph(g.n, mask, vertices, tuple(sorted(edges)), traces)


def edges_with_label(a: AssocGraph, u: int) -> list[Edge]:
    if not a.s_mask >> u & 1:
        raise GraphError(f"{u} is not a label (not in the LD-set {a.labels})")
    return [e for e in a.edges if e[2] == u]


# ---------------------------------------------------------------------------
# property checks


@dataclass(frozen=True)
class PropertyReport:
    order: bool
    bipartite: bool
    incident_labels: bool
    cycle_parity: bool
    walk_closure: bool
    monotone_paths: bool
    levels: bool
    cycles_checked: int = 0
    walks_checked: int = 0
    paths_checked: int = 0
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(
            (self.order, self.bipartite, self.incident_labels, self.cycle_parity,
             self.walk_closure, self.monotone_paths, self.levels)
        )


def _two_colouring(a: AssocGraph) -> bool:
    nbrs = a.adjacency()
    colour: dict[int, int] = {}
    for start in a.vertices:
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, _ in nbrs[x]:
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return False
    return True


def _fundamental_cycle_parities(a: AssocGraph) -> list[tuple[Edge, int]]:
    """Label-parity mask of the fundamental cycle closed by each non-tree edge."""
    nbrs = a.adjacency()
    # xor of label bits along the tree path from the root of each tree
    acc: dict[int, int] = {}
    tree: set[tuple[int, int]] = set()
    for root in a.vertices:
        if root in acc:
            continue
        acc[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, lab in nbrs[x]:
                if y not in acc:
                    acc[y] = acc[x] ^ (1 << lab)
                    tree.add((min(x, y), max(x, y)))
                    queue.append(y)
    return [(e, acc[e[0]] ^ acc[e[1]] ^ (1 << e[2])) for e in a.edges if (e[0], e[1]) not in tree]


def _edge_label(a: AssocGraph) -> dict[tuple[int, int], int]:
    return {(x, y): lab for x, y, lab in a.edges}


def check_walk(a: AssocGraph, walk: Sequence[int], labels: dict | None = None) -> bool:
    """Every prefix of a trail using each label an even number of times is closed."""
    labels = labels or _edge_label(a)
    used = set()
    parity = 0
    for i in range(1, len(walk)):
        key = (min(walk[i - 1], walk[i]), max(walk[i - 1], walk[i]))
        if key not in labels:
            raise ValueError(f"{walk[i - 1]}-{walk[i]} is not an edge")
        if key in used:
            raise ValueError(f"walk repeats edge {key}")
        used.add(key)
        parity ^= 1 << labels[key]
        if parity == 0 and walk[i] != walk[0]:
            return False
    return True


def check_monotone_path(a: AssocGraph, path: Sequence[int], labels: dict | None = None) -> bool:
    """Labels along a level-increasing path are distinct and each later trace holds all earlier labels."""
    labels = labels or _edge_label(a)
    seen = 0
    for i in range(1, len(path)):
        x, y = path[i - 1], path[i]
        if a.level(y) != a.level(x) + 1:
            raise ValueError(f"path step {x}->{y} is not level-increasing")
        lab = labels[(min(x, y), max(x, y))]
        if seen >> lab & 1:
            return False
        seen |= 1 << lab
        if a.traces[y] & seen != seen:
            return False
    return True


def check_properties(
    a: AssocGraph,
    walks: Iterable[Sequence[int]] = (),
    paths: Iterable[Sequence[int]] | None = None,
) -> PropertyReport:
    """Evaluate the structural properties of an associated graph.

    Order formula, bipartiteness, distinct labels on incident edges and
    even label counts on every fundamental cycle are checked directly.
    Walk closure is checked on the supplied trails (every prefix); the
    monotone-path properties on the supplied paths, or on every
    level-increasing path when ``paths`` is None.
    """
    failures = []
    k = bin(a.s_mask).count("1")
    order = len(a.vertices) == a.source_order - k + 1
    if not order:
        failures.append("order")

    bip = _two_colouring(a)
    if not bip:
        failures.append("bipartite")

    incident = True
    for x in a.vertices:
        labs = [e[2] for e in a.incident(x)]
        if len(labs) != len(set(labs)):
            incident = False
            failures.append(f"incident labels repeat at {x}")
            break

    cycles = _fundamental_cycle_parities(a)
    parity = all(p == 0 for _, p in cycles)
    if not parity:
        failures.append("cycle parity")

    labels = _edge_label(a)
    walk_ok = True
    n_walks = 0
    for w in walks:
        n_walks += 1
        if not check_walk(a, w, labels):
            walk_ok = False
            failures.append(f"open even walk {list(w)}")
            break

    if paths is None:
        paths = monotone_paths(a)
    path_ok = True
    n_paths = 0
    for p in paths:
        n_paths += 1
        if not check_monotone_path(a, p, labels):
            path_ok = False
            failures.append(f"monotone path {list(p)}")
            break

    levels_ok = (
        all(abs(a.level(x) - a.level(y)) == 1 for x, y, _ in a.edges)
        and [x for x in a.vertices if a.level(x) == 0] == [a.z]
        and sum(1 for x in a.vertices if a.level(x) == k) <= 1
    )
    if not levels_ok:
        failures.append("levels")

    return PropertyReport(
        order=order,
        bipartite=bip,
        incident_labels=incident,
        cycle_parity=parity,
        walk_closure=walk_ok,
        monotone_paths=path_ok,
        levels=levels_ok,
        cycles_checked=len(cycles),
        walks_checked=n_walks,
        paths_checked=n_paths,
        failures=tuple(failures),
    )


def sample_trails(a: AssocGraph, count: int, rng: random.Random, max_len: int | None = None) -> list[list[int]]:
    """Random walks that never reuse an edge, stopped at a dead end or ``max_len`` edges."""
    nbrs = a.adjacency()
    max_len = max_len or len(a.edges)
    out = []
    for _ in range(count):
        x = rng.choice(a.vertices)
        walk = [x]
        used = set()
        while len(walk) <= max_len:
            options = [y for y, _ in nbrs[x] if (min(x, y), max(x, y)) not in used]
            if not options:
                break
            y = rng.choice(options)
            used.add((min(x, y), max(x, y)))
            walk.append(y)
            x = y
        out.append(walk)
    return out


def monotone_paths(a: AssocGraph) -> list[list[int]]:
    """Every path of at least one edge whose levels increase by one at each step."""
    up: dict[int, list[int]] = {x: [] for x in a.vertices}
    for x, y, _ in a.edges:
        lo, hi = (x, y) if a.level(x) < a.level(y) else (y, x)
        up[lo].append(hi)
    out = []

    def extend(path):
        for y in up[path[-1]]:
            nxt = path + [y]
            out.append(nxt)
            extend(nxt)

    for x in a.vertices:
        extend([x])
    return out


# ---------------------------------------------------------------------------
# two-edges-per-label subgraphs


@dataclass(frozen=True)
class HSubgraph:
    """Subgraph spanned by the chosen edges; ``graph`` vertex ``i`` is ``vertices[i]``."""

    graph: Graph
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted({e[2] for e in self.edges}))


ChoiceRule = Callable[[int, list[Edge]], Sequence[Edge]]


def _lex(label, edges):
    return edges[:2]


def _reverse(label, edges):
    return edges[-2:]


def random_rule(seed: int) -> ChoiceRule:
    rng = random.Random(seed)

    def choose(label, edges):
        return rng.sample(edges, 2)

    return choose


_RULES = {"lex": _lex, "reverse": _reverse}


def select_H(a: AssocGraph, choice_rule: str | ChoiceRule = "lex") -> HSubgraph:
    rule = _RULES[choice_rule] if isinstance(choice_rule, str) else choice_rule
    chosen: list[Edge] = []
    for u in a.labels:
        cands = edges_with_label(a, u)
        if len(cands) < 2:
            raise LabelMultiplicityError(u, len(cands))
        pick = list(rule(u, cands))
        if len(pick) != 2 or len(set(pick)) != 2 or not all(e in cands for e in pick):
            raise ValueError(f"choice rule returned {pick} for label {u}")
        chosen += pick
    chosen.sort()
    verts = tuple(sorted({x for e in chosen for x in e[:2]}))
    index = {x: i for i, x in enumerate(verts)}
    h = make_graph(len(verts), [(index[x], index[y]) for x, y, _ in chosen])
    return HSubgraph(h, verts, tuple(chosen))


def degree_of_z(a: AssocGraph) -> int:
    return a.degree(a.z)


def has_degree1_W_vertex(g: Graph, bp: Bipartition) -> bool:
    return any(g.degree(w) == 1 for w in iter_bits(bp.w_side))


def to_dot(a: AssocGraph, name: str = "assoc") -> str:
    """Graphviz text with vertex attribute ``level`` and edge attribute ``label``."""

    def vid(x):
        return '"z"' if x == a.z else str(x)

    lines = [f"graph {name} {{"]
    for x in a.vertices:
        lines.append(f"  {vid(x)} [level={a.level(x)}];")
    for x, y, lab in a.edges:
        lines.append(f"  {vid(x)} -- {vid(y)} [label={lab}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
