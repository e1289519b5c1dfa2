"""Bipartite graphs realising each possible gap between λ(G) and λ(Ḡ).

``construct_extremal`` builds a bipartite graph with sides ``U = [r]`` and
``W`` a family of distinct non-empty subsets of ``[r]`` (each ``w`` adjacent to
its subset), then certifies λ(G) = r and λ(Ḡ) = r + 1 with the exact solver.
Subsets are written 1-based as in ``{1, ..., r}``; the graph puts element
``i`` of ``[r]`` on vertex ``i - 1`` and the ``j``-th subset on vertex ``r + j``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .families import FamilyParameterError, FamilySpec, generate_family
from .graph import Graph, GraphError, make_graph
from .solver import is_ld_set, ld_number, ld_number_complement

__all__ = [
    "CertificationError",
    "SubsetFamilyGraph",
    "base_family",
    "subset_family_graph",
    "certify_gap_plus",
    "gap_plus_feasible",
    "construct_extremal",
    "construct_gap_minus",
    "construct_gap_zero",
]

log = logging.getLogger(__name__)


class CertificationError(GraphError):
    def __init__(self, message: str, graph: Graph | None = None):
        super().__init__(message)
        self.graph = graph


@dataclass(frozen=True)
class SubsetFamilyGraph:
    r: int
    w_subsets: tuple[frozenset[int], ...]
    graph: Graph
    lambda_value: int
    lambda_complement: int
    source: str

    @property
    def s(self) -> int:
        return len(self.w_subsets)

    @property
    def u_vertices(self) -> tuple[int, ...]:
        return tuple(range(self.r))


def gap_plus_feasible(r: int, s: int) -> bool:
    """Exact rational test of ``3r/2 + 1 <= s <= 2^r - 1``."""
    return Fraction(3 * r, 2) + 1 <= s <= 2**r - 1


def base_family(r: int) -> list[frozenset[int]]:
    """The listed subset family: ``[r]``, all ``[r]∖{i}``, and pairs removed.

    For odd ``r = 2k + 1`` the final three sets remove ``{r-2, r-1}``,
    ``{r-1, r}`` and ``{r-2, r-1, r}``. Empty sets (only possible at
    ``r = 3``) are dropped.
    """
    full = frozenset(range(1, r + 1))
    fam = [full] + [full - {i} for i in range(1, r + 1)]
    k = r // 2
    if r % 2 == 0:
        fam += [full - {2 * i - 1, 2 * i} for i in range(1, k + 1)]
    else:
        fam += [full - {2 * i - 1, 2 * i} for i in range(1, k)]
        fam += [full - {r - 2, r - 1}, full - {r - 1, r}, full - {r - 2, r - 1, r}]
    out = []
    for sub in fam:
        if sub and sub not in out:
            out.append(sub)
    return out


def subset_family_graph(r: int, subsets) -> Graph:
    edges = [(i - 1, r + j) for j, sub in enumerate(subsets) for i in sorted(sub)]
    return make_graph(r + len(subsets), edges)


def certify_gap_plus(g: Graph, r: int) -> tuple[bool, int, int]:
    """Whether ``U = {0..r-1}`` is an LD-set, λ(G) = r and λ(Ḡ) = r + 1."""
    if not g.is_connected() or not is_ld_set(g, range(r)):
        return False, -1, -1
    lam = ld_number(g).value
    if lam != r:
        return False, lam, -1
    lam_bar = ld_number_complement(g)
    return lam_bar == r + 1, lam, lam_bar


def _sort_key(sub: frozenset[int]):
    return (-len(sub), sorted(sub))


def construct_extremal(r: int, s: int) -> SubsetFamilyGraph:
    """Certified bipartite graph with sides ``r``, ``s`` and λ(Ḡ) = λ(G) + 1.

    Starts from :func:`base_family`; trims it (last listed sets first) when it
    is larger than ``s``, extends it with further subsets in decreasing
    cardinality when smaller. Every trim or extension step keeps only
    families that still certify.
    """
    if r < 3 or not gap_plus_feasible(r, s):
        raise FamilyParameterError(
            f"(r, s) = ({r}, {s}) outside the range 3 <= r, 3r/2 + 1 <= s <= 2^r - 1 "
            "where such bipartite graphs exist"
        )
    fam = base_family(r)
    source = "base"
    ok, lam, lam_bar = certify_gap_plus(subset_family_graph(r, fam), r)
    if not ok:
        raise CertificationError(
            f"base family for r={r} failed certification (lambda={lam}, lambda_complement={lam_bar})",
            subset_family_graph(r, fam),
        )

    while len(fam) > s:
        source = "base-trimmed"
        for idx in range(len(fam) - 1, -1, -1):
            trial = fam[:idx] + fam[idx + 1 :]
            if certify_gap_plus(subset_family_graph(r, trial), r)[0]:
                log.debug("r=%d: dropped %s from the base family", r, sorted(fam[idx]))
                fam = trial
                break
        else:
            raise CertificationError(f"no certified trim of the base family to s={s}", subset_family_graph(r, fam))

    if len(fam) < s:
        source = "base-extended"
        full = frozenset(range(1, r + 1))
        extras = sorted(
            (frozenset(c) for k in range(r, 0, -1) for c in combinations(sorted(full), k)),
            key=_sort_key,
        )
        for sub in extras:
            if len(fam) == s:
                break
            if sub in fam:
                continue
            trial = fam + [sub]
            if certify_gap_plus(subset_family_graph(r, trial), r)[0]:
                fam = trial
            else:
                log.debug("r=%d: skipped %s, breaks certification", r, sorted(sub))
        if len(fam) < s:
            raise CertificationError(f"could not extend the family to s={s}", subset_family_graph(r, fam))

    g = subset_family_graph(r, fam)
    ok, lam, lam_bar = certify_gap_plus(g, r)
    if not ok:
        raise CertificationError(f"final family failed certification for (r, s) = ({r}, {s})", g)
    return SubsetFamilyGraph(r, tuple(fam), g, lam, lam_bar, source)


def _check_bipartite_range(r: int, s: int) -> None:
    if not 3 <= r <= s:
        raise FamilyParameterError(f"requires 3 <= r <= s, got r={r}, s={s}")


def construct_gap_minus(r: int, s: int, certify: bool = False) -> Graph:
    """Bi-star ``K_2(r, s)``: λ = r + s - 2 and λ(Ḡ) = r + s - 3."""
    _check_bipartite_range(r, s)
    g = generate_family(FamilySpec("bistar", r=r, s=s))
    if certify:
        lam, lam_bar = ld_number(g).value, ld_number_complement(g)
        if (lam, lam_bar) != (r + s - 2, r + s - 3):
            raise CertificationError(f"bistar({r},{s}) gave lambda={lam}, lambda_complement={lam_bar}", g)
    return g


def construct_gap_zero(r: int, s: int, certify: bool = False) -> Graph:
    """Biclique ``K_{r,s}``: λ = λ(Ḡ) = r + s - 2."""
    _check_bipartite_range(r, s)
    g = generate_family(FamilySpec("complete_bipartite", r=r, s=s))
    if certify:
        lam, lam_bar = ld_number(g).value, ld_number_complement(g)
        if (lam, lam_bar) != (r + s - 2, r + s - 2):
            raise CertificationError(f"K_{{{r},{s}}} gave lambda={lam}, lambda_complement={lam_bar}", g)
    return g
