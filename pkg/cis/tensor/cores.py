import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..chevalley.cores import LieAlgebraModel
from ..parabolic.cores import ParabolicCase
from ..rootsys.cores import format_root
from ..utils.errors import ConsistencyError, NoClosedFormError
from ..utils.linalg import kernel
from ..utils.scalars import ZERO, QuadExt
from ..utils.types import ConstituentSource, ConstituentType, Root, Weight
from .weyl import WeightSystem, as_weight, dominant_conjugate, is_dominant, levi_rho, weyl_dimension

__all__ = [
    "Decomposition",
    "SpecialConstituent",
    "OmegaRootData",
    "klimyk_decompose",
    "lgamma_decomposition",
    "decomposition_dimensions",
    "special_constituents",
    "constituent_type",
    "delta_nu",
    "omega_root_data",
    "wedge2_highest_vectors",
]

logger = logging.getLogger(__name__)


def _add(a: Sequence, b: Sequence, sign: int = 1) -> tuple:
    return tuple(x + sign * y for x, y in zip(a, b))


def _as_root(w: Weight) -> Root:
    if any(Fraction(c).denominator != 1 for c in w):
        raise ConsistencyError(f"weight {w} is not in the root lattice")
    return tuple(int(c) for c in w)


@dataclass(frozen=True)
class Decomposition:
    constituents: tuple[tuple[Weight, int], ...]

    @property
    def highest_weights(self) -> list[Weight]:
        return [hw for hw, _ in self.constituents]

    @property
    def multiplicity_free(self) -> bool:
        return all(m == 1 for _, m in self.constituents)

    def roots(self) -> set[Root]:
        return {_as_root(hw) for hw in self.highest_weights}


def klimyk_decompose(
    m: LieAlgebraModel,
    levi: Iterable[int],
    hw_left: Sequence,
    weights_right: WeightSystem,
) -> Decomposition:
    """V(hw_left) (x) W for the Levi subalgebra on the 1-based simple roots ``levi``.

    For every weight nu of W, hw_left + nu + rho is conjugated to the dominant
    chamber; terms landing on a wall drop out, the rest contribute with the sign
    of the Weyl element.
    """
    rs = m.root_system
    levi = tuple(sorted(levi))
    hw_left = as_weight(hw_left)
    if not is_dominant(rs, levi, hw_left):
        raise ValueError(f"{hw_left} is not dominant for the Levi subsystem {list(levi)}")
    rho = levi_rho(rs, levi)
    signed: dict[Weight, int] = {}
    for nu, mult in weights_right.weights.items():
        w, count = dominant_conjugate(rs, levi, _add(_add(hw_left, nu), rho))
        if any(rs.coroot_pairing(w, j - 1) == 0 for j in levi):
            continue
        hw = _add(w, rho, -1)
        signed[hw] = signed.get(hw, 0) + (-1) ** count * mult
    constituents = []
    for hw, mult in signed.items():
        if mult < 0:
            raise ConsistencyError(f"Klimyk: negative multiplicity {mult} for {hw}")
        if mult:
            constituents.append((hw, mult))
    constituents.sort(key=lambda c: (-sum(c[0]), c[0]))
    return Decomposition(tuple(constituents))


def lgamma_decomposition(case: ParabolicCase) -> Decomposition:
    """l_gamma (x) z(n) as a module for the full Levi factor."""
    zn = WeightSystem.from_roots(case.gamma, case.delta_zn)
    return klimyk_decompose(case.model, case.levi_simples, case.xi_gamma, zn)


def decomposition_dimensions(case: ParabolicCase, dec: Decomposition) -> tuple[int, int]:
    """(sum of constituent dimensions, dim l_gamma * dim z(n))."""
    rs = case.root_system
    total = sum(mult * weyl_dimension(rs, case.levi_simples, hw) for hw, mult in dec.constituents)
    dim_lgamma = weyl_dimension(rs, case.levi_simples, case.xi_gamma)
    return total, dim_lgamma * len(case.delta_zn)


@dataclass(frozen=True)
class SpecialConstituent:
    """V(nu) with nu = mu + epsilon, epsilon in Delta(g(1)), nu != gamma."""

    nu: Root
    epsilon: Root
    kind: ConstituentType
    source: ConstituentSource


def constituent_type(case: ParabolicCase, epsilon: Root) -> ConstituentType:
    rs = case.root_system
    if rs.is_root(_add(case.mu, epsilon)):
        return ConstituentType.TYPE_3
    if tuple(epsilon) == case.mu:
        return ConstituentType.TYPE_2
    if rs.is_long(case.mu) and rs.is_long(epsilon):
        return ConstituentType.TYPE_1A
    return ConstituentType.TYPE_1B


def special_constituents(case: ParabolicCase) -> list[SpecialConstituent]:
    out = []
    found = []
    for hw in lgamma_decomposition(case).highest_weights:
        nu = _as_root(hw)
        if nu == case.gamma:
            continue
        eps = _add(nu, case.mu, -1)
        if eps in case.g1_set:
            found.append(SpecialConstituent(nu, eps, constituent_type(case, eps), ConstituentSource.LGAMMA))
    if len(found) != 1:
        raise ConsistencyError(f"{case.label}: expected one special constituent in l_gamma (x) z(n), found {len(found)}")
    out.extend(found)

    if case.xi_ngamma is not None:
        nu = _add(case.xi_ngamma, case.gamma)
        eps = _add(nu, case.mu, -1)
        if eps not in case.g1_set:
            raise ConsistencyError(f"{case.label}: l_ngamma (x) z(n) = V({format_root(nu)}) is not special")
        out.append(SpecialConstituent(nu, eps, constituent_type(case, eps), ConstituentSource.LNGAMMA))
    for sc in out:
        logger.info("%s: special constituent nu=%s type %s", case.label, format_root(sc.nu), sc.kind.value)
    return out


def delta_nu(case: ParabolicCase, nu: Root, roots: Iterable[Root]) -> tuple[Root, ...]:
    """{alpha in roots : nu - alpha is a root}."""
    rs = case.root_system
    return tuple(a for a in roots if rs.is_root(_add(nu, a, -1)))


@dataclass(frozen=True)
class OmegaRootData:
    constituent: SpecialConstituent
    delta_g1: tuple[Root, ...]
    delta_zn: tuple[Root, ...]
    theta: Mapping[Root, Root] = field(hash=False)
    c_mue: QuadExt = ZERO


def c_summands(case: ParabolicCase, sc: SpecialConstituent, zn_roots: Iterable[Root]) -> list[QuadExt]:
    n = case.model.n
    mu, eps = case.mu, sc.epsilon
    out = []
    for gt in zn_roots:
        d = _add(eps, gt, -1)
        nd = tuple(-c for c in d)
        out.append(n(mu, d) * n(tuple(-c for c in mu), nd) * n(eps, tuple(-c for c in gt)) * n(tuple(-c for c in eps), gt))
    return out


def omega_root_data(case: ParabolicCase, sc: SpecialConstituent) -> OmegaRootData:
    if not sc.kind.has_closed_form:
        raise NoClosedFormError(f"{case.label}: constituent {format_root(sc.nu)} of type {sc.kind.value} has no closed-form support")
    g1 = delta_nu(case, sc.nu, case.delta_g1)
    zn = delta_nu(case, sc.nu, case.delta_zn)
    theta = {b: _add(sc.nu, b, -1) for b in g1 + zn}
    summands = c_summands(case, sc, zn)
    if not summands or any(s.sign() <= 0 for s in summands):
        raise ConsistencyError(f"{case.label}: C(mu, eps) summands must all be positive, got {[str(s) for s in summands]}")
    c = sum(summands, ZERO)
    return OmegaRootData(sc, g1, zn, theta, c)


def wedge2_highest_vectors(case: ParabolicCase) -> list[dict[tuple[Root, Root], QuadExt]]:
    """Weight-gamma vectors of wedge^2 g(1) killed by every raising Levi simple root vector.

    Basis: X_a ^ X_b with a + b = gamma, a before b in root order.
    """
    rs = case.root_system
    model = case.model
    pairs = [(a, _add(case.gamma, a, -1)) for a in case.delta_g1]
    pairs = [(a, b) for a, b in pairs if b in case.g1_set and rs.order_index(a) < rs.order_index(b)]

    def wedge(a: Root, b: Root, c: QuadExt, out: dict) -> None:
        if a == b:
            return
        if rs.order_index(a) > rs.order_index(b):
            a, b, c = b, a, -c
        out[(a, b)] = out.get((a, b), ZERO) + c

    images = []
    for a, b in pairs:
        image: dict = {}
        for j in sorted(case.levi_simples):
            z = rs.simple_root(j)
            part: dict = {}
            na = model.n(z, a)
            if na:
                wedge(_add(a, z), b, na, part)
            nb = model.n(z, b)
            if nb:
                wedge(a, _add(b, z), nb, part)
            for key, v in part.items():
                if v:
                    image[(j, key)] = v
        images.append(image)
    return [{pairs[i]: QuadExt.coerce(c) for i, c in rel.items()} for rel in kernel(images)]
