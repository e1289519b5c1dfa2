"""Known values of λ(G), λ(Ḡ) and λ_g(G) for the named families."""

from __future__ import annotations

from .families import FamilyParameterError, FamilySpec

__all__ = ["QUANTITIES", "closed_form", "check_closed_form_range"]

QUANTITIES = ("lambda", "lambda_complement", "lambda_global")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def check_closed_form_range(spec: FamilySpec) -> None:
    """Raise unless ``spec`` lies in the range where the closed forms hold."""
    kind, n = spec.kind, spec.order
    if kind in ("path", "cycle") and n < 7:
        raise FamilyParameterError(f"{kind}: closed form valid for n >= 7, got n={n}")
    if kind == "wheel" and n < 8:
        raise FamilyParameterError(f"wheel: closed form valid for n >= 8, got n={n}")
    if kind == "complete" and n < 2:
        raise FamilyParameterError(f"complete: closed form valid for n >= 2, got n={n}")
    if kind == "star" and n < 4:
        raise FamilyParameterError(f"star: closed form valid for n >= 4, got n={n}")
    if kind == "complete_bipartite" and not 2 <= spec.r <= spec.s:
        raise FamilyParameterError(f"complete_bipartite: closed form valid for 2 <= r <= n-r, got r={spec.r}, s={spec.s}")
    if kind == "bistar" and not 3 <= spec.r <= spec.s:
        raise FamilyParameterError(f"bistar: closed form valid for 3 <= r <= s, got r={spec.r}, s={spec.s}")


def closed_form(spec: FamilySpec, which: str) -> int:
    if which not in QUANTITIES:
        raise ValueError(f"unknown quantity {which!r}; expected one of {', '.join(QUANTITIES)}")
    check_closed_form_range(spec)
    n = spec.order
    row = QUANTITIES.index(which)
    if spec.kind in ("path", "cycle"):
        values = (_ceil_div(2 * n, 5), _ceil_div(2 * n - 2, 5), _ceil_div(2 * n, 5))
    elif spec.kind == "wheel":
        values = (_ceil_div(2 * n - 2, 5), _ceil_div(2 * n + 1, 5), _ceil_div(2 * n + 1, 5))
    elif spec.kind == "complete":
        values = (n - 1, n, n)
    elif spec.kind == "star":
        values = (n - 1, n - 1, n - 1)
    elif spec.kind == "complete_bipartite":
        values = (n - 2, n - 2, n - 2)
    else:
        values = (n - 2, n - 3, n - 2)
    return values[row]
