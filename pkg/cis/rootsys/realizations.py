"""epsilon-coordinate views of the classical root systems.

Standard realizations: A_n lives in n+1 coordinates, alpha_i = e_i - e_(i+1);
B_n: alpha_n = e_n; C_n: alpha_n = 2 e_n; D_n: alpha_n = e_(n-1) + e_n.
"""

from fractions import Fraction
from typing import Sequence

from ..utils.errors import InvalidAlgebraError
from ..utils.types import Family
from .cores import AlgebraType

__all__ = ["has_eps_view", "simple_to_eps", "eps_to_simple", "format_eps"]


def has_eps_view(t: AlgebraType) -> bool:
    return t.family.is_classical


def _require(t: AlgebraType) -> None:
    if not has_eps_view(t):
        raise InvalidAlgebraError(f"No epsilon realization for {t}")


def simple_to_eps(t: AlgebraType, coords: Sequence) -> tuple[Fraction, ...]:
    _require(t)
    n = t.rank
    c = [Fraction(x) for x in coords]
    if len(c) != n:
        raise InvalidAlgebraError(f"Expected {n} simple-root coordinates for {t}, got {len(c)}")
    size = n + 1 if t.family is Family.A else n
    e = [Fraction(0)] * size
    chain = n if t.family is Family.A else n - 1
    for i in range(chain):
        e[i] += c[i]
        e[i + 1] -= c[i]
    match t.family:
        case Family.B:
            e[n - 1] += c[n - 1]
        case Family.C:
            e[n - 1] += 2 * c[n - 1]
        case Family.D:
            e[n - 2] += c[n - 1]
            e[n - 1] += c[n - 1]
    return tuple(e)


def eps_to_simple(t: AlgebraType, eps: Sequence) -> tuple[Fraction, ...]:
    _require(t)
    n = t.rank
    e = [Fraction(x) for x in eps]
    size = n + 1 if t.family is Family.A else n
    if len(e) != size:
        raise InvalidAlgebraError(f"Expected {size} epsilon coordinates for {t}, got {len(e)}")
    partial = [sum(e[: k + 1], Fraction(0)) for k in range(size)]
    match t.family:
        case Family.A | Family.B:
            c = partial[:n]
        case Family.C:
            c = partial[: n - 1] + [partial[n - 1] / 2]
        case Family.D:
            c = partial[: n - 2] + [partial[n - 2] - partial[n - 1] / 2, partial[n - 1] / 2]
    return tuple(c)


def _coefficient(c: Fraction) -> str:
    if c == 1:
        return ""
    if c == -1:
        return "−"
    return str(c).replace("-", "−")


def format_eps(eps: Sequence) -> str:
    """Render as "ε1+ε2", "2ε1", "ε1−ε3"; zero renders as "0"."""
    out = ""
    for k, c in enumerate(eps, start=1):
        if not c:
            continue
        term = f"{_coefficient(Fraction(c))}ε{k}"
        if out and not term.startswith("−"):
            out += "+"
        out += term
    return out or "0"
