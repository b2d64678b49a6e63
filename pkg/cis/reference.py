"""Published data the computations are checked against.

Classical entries are written in epsilon coordinates and converted; exceptional
entries are simple-root coordinate tuples in Bourbaki labelling. Special values
are coefficients of lambda_q; ``None`` marks an entry without a closed form.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .parabolic.cores import ParabolicSpec
from .rootsys.cores import AlgebraType
from .rootsys.realizations import eps_to_simple
from .utils.errors import UnsupportedCaseError
from .utils.types import SAMPLE_RANKS, ConstituentSource, ConstituentType, Family, Root

__all__ = [
    "expected_highest_root",
    "DistinguishedRoots",
    "distinguished_roots",
    "expected_decomposition",
    "ConstituentRow",
    "expected_constituents",
    "quasi_heisenberg_indices",
    "table_cases",
    "EXCEPTIONAL_CASES",
]

EXCEPTIONAL_CASES = ("E6(3)", "E6(5)", "E7(2)", "E7(6)", "E8(1)", "F4(4)")

_EXCEPTIONAL_HIGHEST = {
    "E6": (1, 2, 2, 3, 2, 1),
    "E7": (2, 2, 3, 4, 3, 2, 1),
    "E8": (2, 3, 4, 6, 5, 4, 3, 2),
    "F4": (2, 3, 4, 2),
    "G2": (3, 2),
}


def expected_highest_root(t: AlgebraType) -> Root:
    n = t.rank
    match t.family:
        case Family.A:
            return (1,) * n
        case Family.B:
            return (1,) + (2,) * (n - 1)
        case Family.C:
            return (2,) * (n - 1) + (1,)
        case Family.D:
            return (1,) + (2,) * (n - 3) + (1, 1)
    return _EXCEPTIONAL_HIGHEST[str(t)]


def _eps(t: AlgebraType, **coeffs: int) -> Root:
    """_eps(t, e1=1, e3=-1) -> simple-root coordinates of e1 - e3."""
    v = [Fraction(0)] * t.rank
    for name, c in coeffs.items():
        v[int(name[1:]) - 1] += c
    out = eps_to_simple(t, v)
    if any(c.denominator != 1 for c in out):
        raise ValueError(f"{coeffs} is not in the root lattice of {t}")
    return tuple(int(c) for c in out)


def _e(*pairs: tuple[int, int]) -> dict[str, int]:
    out: dict[str, int] = {}
    for k, c in pairs:
        out[f"e{k}"] = out.get(f"e{k}", 0) + c
    return out


@dataclass(frozen=True)
class DistinguishedRoots:
    alpha_gamma_index: int
    mu: Root
    gamma: Root
    xi_gamma: Root
    xi_ngamma: Optional[Root]
    lgamma: frozenset[int]
    lngamma: frozenset[int]


def _unit(n: int, i: int) -> Root:
    return tuple(int(k == i - 1) for k in range(n))


_EXCEPTIONAL_ROOTS = {
    "E6(3)": DistinguishedRoots(2, (1, 1, 1, 2, 2, 1), (1, 2, 2, 3, 2, 1), (0, 1, 0, 1, 1, 1), _unit(6, 1), frozenset({2, 4, 5, 6}), frozenset({1})),
    "E6(5)": DistinguishedRoots(2, (1, 1, 2, 2, 1, 1), (1, 2, 2, 3, 2, 1), (1, 1, 1, 1, 0, 0), _unit(6, 6), frozenset({1, 2, 3, 4}), frozenset({6})),
    "E7(2)": DistinguishedRoots(1, (1, 1, 2, 3, 3, 2, 1), (2, 2, 3, 4, 3, 2, 1), (1, 0, 1, 1, 1, 1, 1), None, frozenset({1, 3, 4, 5, 6, 7}), frozenset()),
    "E7(6)": DistinguishedRoots(1, (1, 2, 2, 3, 2, 1, 1), (2, 2, 3, 4, 3, 2, 1), (1, 1, 2, 2, 1, 0, 0), _unit(7, 7), frozenset({1, 2, 3, 4, 5}), frozenset({7})),
    "E8(1)": DistinguishedRoots(8, (1, 3, 3, 5, 4, 3, 2, 1), (2, 3, 4, 6, 5, 4, 3, 2), (0, 1, 1, 2, 2, 2, 2, 1), None, frozenset(range(2, 9)), frozenset()),
    "F4(4)": DistinguishedRoots(1, (1, 2, 3, 1), (2, 3, 4, 2), (1, 2, 2, 0), None, frozenset({1, 2, 3}), frozenset()),
}

# gamma_0 of the l_gamma (x) z(n) decomposition {xi + gamma, gamma, xi + gamma_0}
_EXCEPTIONAL_GAMMA0 = {
    "E6(3)": (1, 1, 2, 3, 2, 1),
    "E6(5)": (1, 1, 2, 3, 2, 1),
    "E7(2)": (1, 2, 3, 4, 3, 2, 1),
    "E7(6)": (1, 2, 2, 4, 3, 2, 1),
    "E8(1)": (2, 3, 4, 6, 5, 4, 2, 1),
    "F4(4)": (1, 2, 4, 2),
}


def _require_quasi_heisenberg(spec: ParabolicSpec) -> tuple[AlgebraType, int, int]:
    t = spec.algebra_type
    i = spec.index
    n = t.rank
    if str(spec) in _EXCEPTIONAL_ROOTS:
        return t, n, i
    if i not in quasi_heisenberg_indices(t) or (t.family is Family.D and i == n - 2):
        raise UnsupportedCaseError(f"No reference data for {spec}")
    return t, n, i


def distinguished_roots(spec: ParabolicSpec) -> DistinguishedRoots:
    t, n, i = _require_quasi_heisenberg(spec)
    if str(spec) in _EXCEPTIONAL_ROOTS:
        return _EXCEPTIONAL_ROOTS[str(spec)]
    levi_gamma = frozenset(range(1, i))
    levi_ngamma = frozenset(range(i + 1, n + 1))
    xi_gamma = _eps(t, **_e((1, 1), (i, -1)))
    mu = _eps(t, **_e((1, 1), (i + 1, 1))) if i < n else _eps(t, e1=1)
    match t.family:
        case Family.B | Family.D:
            gamma = _eps(t, **_e((1, 1), (2, 1)))
            alpha_gamma = 2
            if i == n:
                xi_ngamma = None
            elif i == n - 1:
                xi_ngamma = _eps(t, **_e((n, 1)))
            else:
                xi_ngamma = _eps(t, **_e((i + 1, 1), (i + 2, 1)))
        case _:
            gamma = _eps(t, e1=2)
            alpha_gamma = 1
            xi_ngamma = _eps(t, **_e((i + 1, 2)))
    return DistinguishedRoots(alpha_gamma, mu, gamma, xi_gamma, xi_ngamma, levi_gamma, levi_ngamma)


def expected_decomposition(spec: ParabolicSpec) -> frozenset[Root]:
    """Highest weights of l_gamma (x) z(n)."""
    t, n, i = _require_quasi_heisenberg(spec)
    row = distinguished_roots(spec)
    xi = row.xi_gamma

    def plus(*roots: Root) -> Root:
        return tuple(sum(c) for c in zip(*roots))

    if str(spec) in _EXCEPTIONAL_GAMMA0:
        return frozenset({plus(xi, row.gamma), row.gamma, plus(xi, _EXCEPTIONAL_GAMMA0[str(spec)])})
    out = {plus(xi, row.gamma), row.gamma}
    if t.family is Family.C:
        if i == 2:
            out.add(plus(xi, _eps(t, e2=2)))
        else:
            out.add(plus(xi, _eps(t, **_e((2, 1), (i, 1)))))
            out.add(plus(xi, _eps(t, **_e((1, 1), (2, 1)))))
    elif i == 3:
        out.add(plus(xi, _eps(t, **_e((1, 1), (3, 1)))))
    else:
        out.add(plus(xi, _eps(t, **_e((1, 1), (i, 1)))))
        out.add(plus(xi, _eps(t, **_e((2, 1), (3, 1)))))
    return frozenset(out)


@dataclass(frozen=True)
class ConstituentRow:
    source: ConstituentSource
    nu: Root
    epsilon: Root
    kind: ConstituentType
    s_value: Optional[Fraction]


_LG = ConstituentSource.LGAMMA
_LN = ConstituentSource.LNGAMMA
_1A = ConstituentType.TYPE_1A

_EXCEPTIONAL_CONSTITUENTS = {
    "E6(3)": (
        ConstituentRow(_LG, (1, 2, 2, 4, 3, 2), (0, 1, 1, 2, 1, 1), _1A, Fraction(1)),
        ConstituentRow(_LN, (2, 2, 2, 3, 2, 1), (1, 1, 1, 1, 0, 0), _1A, Fraction(2)),
    ),
    "E6(5)": (
        ConstituentRow(_LG, (2, 2, 3, 4, 2, 1), (1, 1, 1, 2, 1, 0), _1A, Fraction(1)),
        ConstituentRow(_LN, (1, 2, 2, 3, 2, 2), (0, 1, 0, 1, 1, 1), _1A, Fraction(2)),
    ),
    "E7(2)": (ConstituentRow(_LG, (2, 2, 4, 5, 4, 3, 2), (1, 1, 2, 2, 1, 1, 1), _1A, Fraction(2)),),
    "E7(6)": (
        ConstituentRow(_LG, (2, 3, 4, 6, 4, 2, 1), (1, 1, 2, 3, 2, 1, 0), _1A, Fraction(1)),
        ConstituentRow(_LN, (2, 2, 3, 4, 3, 2, 2), (1, 0, 1, 1, 1, 1, 1), _1A, Fraction(3)),
    ),
    "E8(1)": (ConstituentRow(_LG, (2, 4, 5, 8, 7, 6, 4, 2), (1, 1, 2, 3, 3, 3, 2, 1), _1A, Fraction(3)),),
    "F4(4)": (ConstituentRow(_LG, (2, 4, 6, 2), (1, 2, 3, 1), ConstituentType.TYPE_2, Fraction(-1)),),
}


def expected_constituents(spec: ParabolicSpec) -> tuple[ConstituentRow, ...]:
    """Special constituents (l_gamma row first), their types and special values."""
    t, n, i = _require_quasi_heisenberg(spec)
    if str(spec) in _EXCEPTIONAL_CONSTITUENTS:
        return _EXCEPTIONAL_CONSTITUENTS[str(spec)]

    def e(*pairs: tuple[int, int]) -> Root:
        return _eps(t, **_e(*pairs))

    mu = distinguished_roots(spec).mu
    if t.family is Family.C:
        return (
            ConstituentRow(_LG, e((1, 1), (2, 1)), e((2, 1), (i + 1, -1)), ConstituentType.TYPE_3, None),
            ConstituentRow(_LN, e((1, 2), (i + 1, 2)), mu, ConstituentType.TYPE_2, Fraction(-1)),
        )
    if t.family is Family.B and i == n:
        return (ConstituentRow(_LG, e((1, 2)), mu, ConstituentType.TYPE_2, Fraction(-1)),)

    shift = Fraction(1, 2) if t.family is Family.B else Fraction(1)
    rows = [ConstituentRow(_LG, e((1, 2)), e((1, 1), (i + 1, -1)), _1A, n - i - shift)]
    if t.family is Family.B and i == n - 1:
        rows.append(ConstituentRow(_LN, e((1, 1), (2, 1), (n, 1)), e((2, 1)), ConstituentType.TYPE_1B, None))
    else:
        rows.append(ConstituentRow(_LN, e((1, 1), (2, 1), (i + 1, 1), (i + 2, 1)), e((2, 1), (i + 2, 1)), _1A, Fraction(1)))
    return tuple(rows)


def quasi_heisenberg_indices(t: AlgebraType) -> frozenset[int]:
    """Maximal parabolics of quasi-Heisenberg type (D_n(n-2) included)."""
    n = t.rank
    match t.family:
        case Family.B:
            return frozenset(range(3, n + 1))
        case Family.C:
            return frozenset(range(2, n))
        case Family.D:
            return frozenset(range(3, n - 1))
    return {
        "E6": frozenset({3, 5}),
        "E7": frozenset({2, 6}),
        "E8": frozenset({1}),
        "F4": frozenset({4}),
    }.get(str(t), frozenset())


def table_cases(ranks: Optional[dict[str, tuple[int, ...]]] = None, *, largest_only: bool = True) -> list[ParabolicSpec]:
    """Every supported case at the sampled classical ranks, then the exceptional ones."""
    ranks = SAMPLE_RANKS if ranks is None else ranks
    specs = []
    for fam, sizes in ranks.items():
        for n in sizes[-1:] if largest_only else sizes:
            t = AlgebraType(Family(fam), n)
            for i in sorted(quasi_heisenberg_indices(t)):
                if t.family is Family.D and i == n - 2:
                    continue
                specs.append(ParabolicSpec(t, frozenset({i})))
    specs.extend(ParabolicSpec.parse(label) for label in EXCEPTIONAL_CASES)
    return specs
