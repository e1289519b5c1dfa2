"""Named graph families.

Labelling conventions (fixed so results are reproducible):

* ``path``: ``0-1-...-(n-1)``
* ``cycle``: the path plus the edge ``(n-1, 0)``
* ``wheel``: a cycle on ``0..n-2``; the hub is the last vertex ``n-1``
* ``complete``: all pairs
* ``star``: centre ``0``, leaves ``1..n-1``
* ``complete_bipartite``: sides ``0..r-1`` and ``r..r+s-1``
* ``bistar``: star ``K_{1,r-1}`` centred at ``0`` (leaves ``1..r-1``) and star
  ``K_{1,s-1}`` centred at ``r`` (leaves ``r+1..r+s-1``), centres joined
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, make_graph

__all__ = ["FamilyParameterError", "FamilySpec", "KINDS", "generate_family"]

KINDS = ("path", "cycle", "wheel", "complete", "star", "complete_bipartite", "bistar")
TWO_PARAMETER = ("complete_bipartite", "bistar")

# loosest parameters for which the construction still makes sense
_MIN_ORDER = {"path": 1, "cycle": 3, "wheel": 4, "complete": 1, "star": 2}


class FamilyParameterError(GraphError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int | None = None
    r: int | None = None
    s: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FamilyParameterError(f"unknown family {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.kind in TWO_PARAMETER:
            if self.r is None or self.s is None:
                raise FamilyParameterError(f"{self.kind} needs parameters r and s")
            if self.n is not None and self.n != self.r + self.s:
                raise FamilyParameterError(f"{self.kind}: n={self.n} but r+s={self.r + self.s}")
        elif self.n is None:
            raise FamilyParameterError(f"{self.kind} needs parameter n")

    @property
    def order(self) -> int:
        if self.kind in TWO_PARAMETER:
            return self.r + self.s
        return self.n

    def label(self) -> str:
        if self.kind in TWO_PARAMETER:
            return f"{self.kind}({self.r},{self.s})"
        return f"{self.kind}({self.n})"


def generate_family(spec: FamilySpec) -> Graph:
    kind = spec.kind
    if kind in TWO_PARAMETER:
        r, s = spec.r, spec.s
        if r < 1 or s < 1:
            raise FamilyParameterError(f"{kind} requires r >= 1 and s >= 1, got r={r}, s={s}")
        if kind == "complete_bipartite":
            return make_graph(r + s, [(u, w) for u in range(r) for w in range(r, r + s)])
        edges = [(0, r)]
        edges += [(0, i) for i in range(1, r)]
        edges += [(r, j) for j in range(r + 1, r + s)]
        return make_graph(r + s, edges)

    n = spec.n
    if n < _MIN_ORDER[kind]:
        raise FamilyParameterError(f"{kind} requires n >= {_MIN_ORDER[kind]}, got n={n}")
    if kind == "path":
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "wheel":
        rim = n - 1
        edges = [(i, (i + 1) % rim) for i in range(rim)]
        edges += [(i, n - 1) for i in range(rim)]
        return make_graph(n, edges)
    if kind == "complete":
        return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    return make_graph(n, [(0, i) for i in range(1, n)])
