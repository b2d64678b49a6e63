"""Covariant maps tau_k, the Omega_1 / Omega_2 systems and their brackets at the identity.

Dual vectors Y* live in g(2-k) (x) z(n-bar) through the pairing kappa (x) kappa,
so X_gamma* is X_(-gamma). Operators are UEAElements over U(n-bar) with
coefficients in Q(sqrt 2)[s].
"""

import logging
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from ..chevalley.layouts import AlgebraElement, Label, TensorElement
from ..parabolic.cores import ParabolicCase
from ..rootsys.cores import format_root
from ..tensor.cores import OmegaRootData, SpecialConstituent, omega_root_data
from ..tensor.weyl import weyl_dimension
from ..utils.errors import ConsistencyError, ModelMismatchError, NoClosedFormError, NotAffineError
from ..utils.linalg import EchelonBasis, kernel, rank
from ..utils.scalars import ZERO, QuadExt, SPoly
from ..utils.types import ConstituentType, Root
from .layouts import PolyOnG1, UEAElement, Word

__all__ = [
    "omega_tensor",
    "tau_k",
    "tau_tilde",
    "symmetrize",
    "omega_operator",
    "lowest_vector",
    "lowest_vectors",
    "build_omega2_lowest",
    "omega2_closed_form",
    "generate_dual_vectors",
    "generate_system",
    "bracket_at_identity",
    "SpecialValueResult",
    "solve_special_value",
    "conformal_certificate",
    "Omega1Operator",
    "omega1_system",
    "omega1_residuals",
    "omega1_special_value",
    "omega_invariance_defect",
    "tau_equivariance_defect",
    "tau2_highest_vector",
    "vgamma_lowest_vectors",
    "ExplorationResult",
    "explore_constituent",
    "straightness_defect",
]

logger = logging.getLogger(__name__)


def _neg(r: Root) -> Root:
    return tuple(-c for c in r)


def _add(a: Root, b: Root, sign: int = 1) -> Root:
    return tuple(x + sign * y for x, y in zip(a, b))


def _acc(target: dict, key, value) -> None:
    new = target.get(key, ZERO) + value
    if new:
        target[key] = new
    else:
        target.pop(key, None)


def _check_k(k: int) -> None:
    if k not in (1, 2):
        raise ValueError(f"tau_k is implemented for k = 1, 2, got k = {k}")


def omega_tensor(case: ParabolicCase) -> TensorElement:
    """omega = sum_j X_(-gamma_j) (x) X_(gamma_j) over Delta(z(n))."""
    return case.model.tensor({(_neg(g), g): 1 for g in case.delta_zn})


def tau_k(case: ParabolicCase, k: int, X: AlgebraElement) -> TensorElement:
    """(1/k!) (ad(X)^k (x) Id) omega for X in g(1)."""
    _check_k(k)
    bad = [label for label in X.terms if isinstance(label, int) or label not in case.g1_set]
    if bad:
        raise ValueError(f"tau_k needs X in g(1); got components outside it: {bad}")
    model = case.model
    scale = Fraction(1, factorial(k))
    out: dict = {}
    for g in case.delta_zn:
        u = model.x(_neg(g))
        for _ in range(k):
            u = X.bracket(u)
        for label, c in u.terms.items():
            _acc(out, (label, g), c * scale)
    return model.tensor(out)


def tau_tilde(case: ParabolicCase, k: int, ystar: TensorElement) -> PolyOnG1:
    """The polynomial X -> (kappa (x) kappa)(Y*, tau_k(X)) in the coordinates eta_a of X."""
    _check_k(k)
    rs = case.root_system
    n = case.model.n
    order = rs.order_index
    out: dict = {}
    for (la, lb), c in ystar.terms.items():
        if isinstance(lb, int) or _neg(lb) not in case.zn_set or case.label_grade(la) != 2 - k:
            raise ModelMismatchError(f"{la} (x) {lb} is not in g({2 - k}) (x) z(n-bar)")
        gt = _neg(lb)
        if k == 1:
            a = _add(gt, la, -1)
            if a in case.g1_set:
                _acc(out, (a,), c * n(a, lb))
            continue
        w = case.model.label_weight(la)
        for a in case.delta_g1:
            b = _add(_add(gt, w, -1), a, -1)
            if b not in case.g1_set:
                continue
            inner = n(b, lb)
            if not inner:
                continue
            if isinstance(la, int):
                value = inner * rs.inner(rs.simple_roots[la], a)
            else:
                value = inner * n(a, _add(b, lb))
            if value:
                _acc(out, tuple(sorted((a, b), key=order)), c * value / 2)
    return PolyOnG1(k, out)


def symmetrize(case: ParabolicCase, poly: PolyOnG1) -> UEAElement:
    """R o sigma: eta_a eta_b -> (1/2)(R(X_-a)R(X_-b) + R(X_-b)R(X_-a)), eta_a -> R(X_-a)."""
    if poly.degree > 2:
        raise ValueError(f"symmetrization of degree {poly.degree} is not supported")
    items = []
    for mono, c in poly.terms.items():
        word = tuple(_neg(a) for a in mono)
        if len(word) < 2:
            items.append((word, c))
        else:
            items.append((word, c / 2))
            items.append((word[::-1], c / 2))
    return UEAElement(case.model, items)


def omega_operator(case: ParabolicCase, k: int, ystar: TensorElement) -> UEAElement:
    """Omega_k(Y*) = R o sigma o tau~_k(Y*)."""
    return symmetrize(case, tau_tilde(case, k, ystar))


def lowest_vector(case: ParabolicCase, sc: SpecialConstituent) -> TensorElement:
    """Y*_l = sum_t N_(-mu, gamma_t - eps) N_(-eps, gamma_t) X_(-theta(gamma_t)) (x) X_(-gamma_t)."""
    data = omega_root_data(case, sc)
    n = case.model.n
    mu, eps = case.mu, sc.epsilon
    terms = {}
    for gt in data.delta_zn:
        c = n(_neg(mu), _add(gt, eps, -1)) * n(_neg(eps), gt)
        terms[(_neg(data.theta[gt]), _neg(gt))] = c
    return case.model.tensor(terms)


def lowest_vectors(case: ParabolicCase, nu: Root) -> list[TensorElement]:
    """Weight -nu vectors of l (x) z(n-bar) killed by every lowering Levi simple root vector."""
    rs = case.root_system
    model = case.model
    keys: list[tuple[Label, Root]] = []
    for gt in case.delta_zn:
        a = _add(nu, gt, -1)
        if not any(a):
            keys.extend((i, _neg(gt)) for i in range(rs.rank))
        elif rs.is_root(a) and case.grade(a) == 0:
            keys.append((_neg(a), _neg(gt)))
    lowering = [(j, model.x(_neg(rs.simple_root(j)))) for j in sorted(case.levi_simples)]
    images = []
    for key in keys:
        e = model.tensor({key: 1})
        image: dict = {}
        for j, z in lowering:
            for k2, c in e.act(z).terms.items():
                image[(j, k2)] = c
        images.append(image)
    out = []
    for relation in kernel(images):
        out.append(model.tensor({keys[i]: QuadExt.coerce(c) for i, c in relation.items()}))
    return out


def build_omega2_lowest(case: ParabolicCase, sc: SpecialConstituent) -> UEAElement:
    return omega_operator(case, 2, lowest_vector(case, sc))


def omega2_closed_form(case: ParabolicCase, sc: SpecialConstituent) -> UEAElement:
    """(1/2) sum_(alpha, t) c_t N_(alpha,-gamma_t) N_(-theta(gamma_t), theta(alpha)) R(X_-alpha) R(X_-theta(alpha))."""
    data = omega_root_data(case, sc)
    n = case.model.n
    mu, eps = case.mu, sc.epsilon
    items = []
    for gt in data.delta_zn:
        ct = n(_neg(mu), _add(gt, eps, -1)) * n(_neg(eps), gt)
        for a in data.delta_g1:
            v = ct * n(a, _neg(gt)) * n(_neg(data.theta[gt]), data.theta[a])
            if v:
                items.append(((_neg(a), _neg(data.theta[a])), v / 2))
    return UEAElement(case.model, items)


def generate_dual_vectors(case: ParabolicCase, sc: SpecialConstituent) -> list[TensorElement]:
    """Basis of V(nu)* grown from Y*_l by the raising Levi simple root vectors."""
    rs = case.root_system
    model = case.model
    target = weyl_dimension(rs, case.levi_simples, sc.nu)
    start = lowest_vector(case, sc)
    raising = [model.x(rs.simple_root(j)) for j in sorted(case.levi_simples)]
    bases: dict[Root, EchelonBasis] = {start.weight(): EchelonBasis()}
    bases[start.weight()].insert(start.terms)
    vectors = [start]
    queue = deque([start])
    while queue and len(vectors) < target:
        y = queue.popleft()
        for z in raising:
            v = y.act(z)
            if not v:
                continue
            basis = bases.setdefault(v.weight(), EchelonBasis())
            if basis.insert(v.terms):
                vectors.append(v)
                queue.append(v)
    if len(vectors) != target:
        raise ConsistencyError(f"{case.label}: raising Y*_l spans {len(vectors)} vectors, dim V({format_root(sc.nu)}) = {target}")
    logger.debug("%s: %d dual vectors for nu=%s", case.label, len(vectors), format_root(sc.nu))
    return vectors


def generate_system(case: ParabolicCase, sc: SpecialConstituent, lowest: Optional[UEAElement] = None) -> list[UEAElement]:
    """Omega_2 applied to a basis of V(nu)*; the first operator is Omega_2(Y*_l)."""
    operators = [omega_operator(case, 2, y) for y in generate_dual_vectors(case, sc)]
    if lowest is not None and operators[0] != lowest:
        raise ConsistencyError(f"{case.label}: given lowest operator differs from Omega_2(Y*_l)")
    got = rank(op.constant_part() for op in operators)
    if got != len(operators):
        raise ConsistencyError(f"{case.label}: Omega_2 system for nu={format_root(sc.nu)} has rank {got} < {len(operators)}")
    return operators


def _r(case: ParabolicCase, element: AlgebraElement) -> UEAElement:
    """R of the n-bar part of an algebra element."""
    items = [((label,), c) for label, c in element.terms.items() if case.label_grade(label) < 0]
    return UEAElement(case.model, items, ordered=True)


def _lambda_q(case: ParabolicCase, element: AlgebraElement) -> QuadExt:
    return case.lambda_q_on_cartan(element.cartan_part())


def bracket_at_identity(case: ParabolicCase, Y: AlgebraElement, D: UEAElement) -> UEAElement:
    """[pi_s(Y), D]_e for D of PBW degree <= 2."""
    if D.degree > 2:
        raise ValueError(f"bracket at the identity supports PBW degree <= 2, got {D.degree}")
    model = case.model
    grade = case.label_grade

    def q_part(e: AlgebraElement) -> AlgebraElement:
        return e.filter(lambda label: grade(label) >= 0)

    y_q = q_part(Y)
    minus_s = SPoly.linear(0, -1)
    one = UEAElement.one(model)
    total = UEAElement(model)
    for word, coeff in D.terms.items():
        if not word:
            continue
        if len(word) == 1:
            x = model.x(word[0])
            yx = Y.bracket(x)
            part = _r(case, y_q.bracket(x)) + one * (minus_s * _lambda_q(case, q_part(yx)))
        else:
            x1, x2 = model.x(word[0]), model.x(word[1])
            r1, r2 = UEAElement.letter(model, word[0]), UEAElement.letter(model, word[1])
            yx1 = Y.bracket(x1)
            yx1_q = q_part(yx1)
            part = (
                _r(case, y_q.bracket(x1)) * r2
                + r1 * _r(case, y_q.bracket(x2))
                + _r(case, yx1_q.bracket(x2))
                + r2 * (minus_s * _lambda_q(case, yx1_q))
                + r1 * (minus_s * _lambda_q(case, q_part(Y.bracket(x2))))
                + one * (minus_s * _lambda_q(case, q_part(yx1.bracket(x2))))
            )
        total = total + part * coeff
    return total


def straightness_defect(case: ParabolicCase, D: UEAElement) -> int:
    """Number of beta in Delta(g(1)) u Delta(z(n)) with [pi_s(X_-beta), D]_e != 0."""
    return sum(1 for b in case.delta_g1 + case.delta_zn if bracket_at_identity(case, case.model.x(_neg(b)), D))


@dataclass(frozen=True)
class SpecialValueResult:
    constituent: SpecialConstituent
    s_value: QuadExt
    prefactor: QuadExt
    residual_direction: Root
    coefficient: SPoly
    s_expected: QuadExt
    delta_nu_g1: int
    operator: UEAElement
    data: OmegaRootData

    @property
    def matches_closed_form(self) -> bool:
        return self.s_value == self.s_expected


def _expected_s(case: ParabolicCase, sc: SpecialConstituent, data: OmegaRootData) -> QuadExt:
    if sc.kind is ConstituentType.TYPE_2:
        return QuadExt(-1)
    return QuadExt(Fraction(len(data.delta_g1), 2) - 1)


def solve_special_value(case: ParabolicCase, sc: SpecialConstituent) -> SpecialValueResult:
    """Solve [pi_s(X_mu), Omega_2(Y*_l)]_e = 0 for s.

    The bracket has grade -1 while every operator of the system has grade -2, so
    the out-of-span part is the whole bracket; it must be a multiple of R(X_-eps).
    """
    if not sc.kind.has_closed_form:
        raise NoClosedFormError(f"{case.label}: constituent {format_root(sc.nu)} of type {sc.kind.value} has no closed-form support")
    data = omega_root_data(case, sc)
    operator = build_omega2_lowest(case, sc)
    if not operator:
        raise ConsistencyError(f"{case.label}: Omega_2(Y*_l) vanishes for nu={format_root(sc.nu)}")
    closed = omega2_closed_form(case, sc)
    if operator != closed:
        raise ConsistencyError(f"{case.label}: Omega_2(Y*_l) disagrees with the closed form\n  {operator}\n  {closed}")

    result = bracket_at_identity(case, case.model.x(case.mu), operator)
    direction = _neg(sc.epsilon)
    others = {w: p for w, p in result.terms.items() if w != (direction,)}
    if others:
        shown = ", ".join(f"{''.join(format_root(a) for a in w)}: {p}" for w, p in others.items())
        raise ConsistencyError(f"{case.label}: bracket is not proportional to R(X{format_root(direction)}); extra terms {shown}")
    coefficient = result.coefficient((direction,))
    try:
        s_value = coefficient.root()
    except NotAffineError as exc:
        raise ConsistencyError(f"{case.label}: bracket coefficient {coefficient} has no unique root") from exc

    if not data.c_mue:
        raise ConsistencyError(f"{case.label}: C(mu, eps) = 0")
    prefactor = -(QuadExt.coerce(case.alpha_q_norm) / 2) * data.c_mue
    s_expected = _expected_s(case, sc, data)
    if coefficient != SPoly.linear(-prefactor * s_expected, prefactor):
        raise ConsistencyError(
            f"{case.label}: bracket coefficient {coefficient} != ({prefactor})·(s - ({s_expected}))"
        )
    logger.info("%s: nu=%s (type %s) special value s=%s", case.label, format_root(sc.nu), sc.kind.value, s_value)
    return SpecialValueResult(
        constituent=sc,
        s_value=s_value,
        prefactor=prefactor,
        residual_direction=direction,
        coefficient=coefficient,
        s_expected=s_expected,
        delta_nu_g1=len(data.delta_g1),
        operator=operator,
        data=data,
    )


def _word_weight(case: ParabolicCase, word: Word) -> Root:
    w = tuple(0 for _ in range(case.root_system.rank))
    for a in word:
        w = _add(w, a)
    return w


def _span_by_weight(case: ParabolicCase, operators: Sequence[UEAElement], s) -> dict[Root, EchelonBasis]:
    bases: dict[Root, EchelonBasis] = {}
    for op in operators:
        values = op.evaluate(s)
        grouped: dict[Root, dict] = {}
        for w, c in values.items():
            grouped.setdefault(_word_weight(case, w), {})[w] = c
        for weight, vec in grouped.items():
            bases.setdefault(weight, EchelonBasis()).insert(vec)
    return bases


def _in_span(case: ParabolicCase, bases: dict[Root, EchelonBasis], values: dict[Word, QuadExt]) -> bool:
    grouped: dict[Root, dict] = {}
    for w, c in values.items():
        grouped.setdefault(_word_weight(case, w), {})[w] = c
    for weight, vec in grouped.items():
        basis = bases.get(weight)
        if basis is None or basis.reduce(vec):
            return False
    return True


def _certificate_elements(case: ParabolicCase) -> dict[str, list[AlgebraElement]]:
    model = case.model
    return {
        "g(1)": [model.x(b) for b in case.delta_g1],
        "z(n)": [model.x(b) for b in case.delta_zn],
        "l": [model.x(b) for b in case.delta_l] + [model.h(i) for i in range(case.root_system.rank)],
    }


def conformal_certificate(
    case: ParabolicCase,
    sc: SpecialConstituent,
    s_value,
    operators: Optional[Sequence[UEAElement]] = None,
) -> dict[str, bool]:
    """For each part of q: every [pi_s(Y), D_i]_e lies in span{(D_j)_e} at the given s."""
    if operators is None:
        operators = generate_system(case, sc)
    bases = _span_by_weight(case, operators, s_value)
    report = {}
    for name, elements in _certificate_elements(case).items():
        ok = True
        for y in elements:
            for op in operators:
                if not _in_span(case, bases, bracket_at_identity(case, y, op).evaluate(s_value)):
                    ok = False
                    break
            if not ok:
                break
        report[name] = ok
    logger.info("%s: certificate for nu=%s at s=%s: %s", case.label, format_root(sc.nu), s_value, report)
    return report


@dataclass(frozen=True)
class Omega1Operator:
    alpha: Root
    ystar: TensorElement
    constant: QuadExt
    operator: UEAElement


def omega1_system(case: ParabolicCase) -> list[Omega1Operator]:
    """Omega_1(Y*_alpha) = c_alpha R(X_-alpha) for every alpha in Delta(g(1))."""
    model = case.model
    n = model.n
    rs = case.root_system
    out = []
    for a in case.delta_g1:
        terms = {}
        c = ZERO
        for gt in case.delta_zn:
            d = _add(gt, a, -1)
            if rs.is_root(d):
                terms[(d, _neg(gt))] = n(_neg(a), gt)
                c = c + n(_neg(a), gt) * n(a, _neg(gt))
        ystar = model.tensor(terms)
        operator = omega_operator(case, 1, ystar)
        if operator != UEAElement.letter(model, _neg(a), c):
            raise ConsistencyError(f"{case.label}: Omega_1(Y*{format_root(a)}) = {operator}, expected ({c})·R(X{format_root(_neg(a))})")
        if not c:
            logger.warning("%s: c_alpha vanishes for alpha=%s", case.label, format_root(a))
        out.append(Omega1Operator(a, ystar, c, operator))
    return out


def omega1_residuals(case: ParabolicCase, system: Optional[Sequence[Omega1Operator]] = None) -> list[SPoly]:
    """Coefficients of [pi_s(Y), D]_e outside span{R(X_-alpha)} over a basis Y of g."""
    if system is None:
        system = omega1_system(case)
    spanned = {(_neg(op.alpha),) for op in system if op.constant}
    model = case.model
    residuals = []
    for label in model.basis_labels:
        y = AlgebraElement.basis(model, label)
        for op in system:
            for w, p in bracket_at_identity(case, y, op.operator).terms.items():
                if w not in spanned:
                    residuals.append(p)
    return residuals


def omega1_special_value(case: ParabolicCase, system: Optional[Sequence[Omega1Operator]] = None) -> QuadExt:
    residuals = omega1_residuals(case, system)
    roots = set()
    for p in residuals:
        if p.degree == 0:
            raise ConsistencyError(f"{case.label}: Omega_1 residual {p} does not depend on s")
        roots.add(p.root())
    if len(roots) != 1:
        raise ConsistencyError(f"{case.label}: Omega_1 residuals give s in {sorted(str(r) for r in roots)}")
    s = roots.pop()
    logger.info("%s: Omega_1 special value s=%s", case.label, s)
    return s


def _levi_basis(case: ParabolicCase) -> list[AlgebraElement]:
    model = case.model
    return [model.x(b) for b in case.delta_l] + [model.h(i) for i in range(case.root_system.rank)]


def _levi_generators(case: ParabolicCase) -> list[AlgebraElement]:
    rs = case.root_system
    model = case.model
    gens = []
    for j in sorted(case.levi_simples):
        a = rs.simple_root(j)
        gens += [model.x(a), model.x(_neg(a))]
    return gens + [model.h(i) for i in range(rs.rank)]


def omega_invariance_defect(case: ParabolicCase) -> int:
    """Number of basis elements Z of l with (ad Z (x) Id + Id (x) ad Z) omega != 0."""
    omega = omega_tensor(case)
    return sum(1 for z in _levi_basis(case) if omega.act(z))


def tau_equivariance_defect(case: ParabolicCase, k: int, samples: int = 50, seed: int = 0) -> int:
    """Failures of Z . tau_k(X) = d tau_k(X)[Z, X] over Levi generators Z and random rational X."""
    _check_k(k)
    rng = random.Random(seed)
    model = case.model
    omega = omega_tensor(case)
    failures = 0
    for _ in range(samples):
        x = model.element({a: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for a in case.delta_g1})
        tx = tau_k(case, k, x)
        for z in _levi_generators(case):
            zx = z.bracket(x)
            lhs = tx.act(z)
            if k == 1:
                rhs = tau_k(case, 1, zx) if zx else model.tensor({})
            else:
                out: dict = {}
                for (la, lb), c in omega.terms.items():
                    u = AlgebraElement.basis(model, la)
                    v = zx.bracket(x.bracket(u)) + x.bracket(zx.bracket(u))
                    for label, cv in v.terms.items():
                        _acc(out, (label, lb), c * cv / 2)
                rhs = model.tensor(out)
            if lhs != rhs:
                failures += 1
    return failures


def tau2_highest_vector(case: ParabolicCase, sc: SpecialConstituent) -> dict[str, bool]:
    """tau_2(X_mu + X_eps) = a ad(X_mu) ad(X_eps) omega with a = 1 + delta(mu, eps), and it is Levi-highest."""
    model = case.model
    x_mu, x_eps = model.x(case.mu), model.x(sc.epsilon)
    a = 2 if sc.epsilon == case.mu else 1
    value = tau_k(case, 2, x_mu + x_eps)
    closed = omega_tensor(case).act_left(x_eps).act_left(x_mu) * a
    return {
        "tau_2(X_mu + X_eps) = a ad(X_mu) ad(X_eps) omega": value == closed,
        "tau_2(X_mu + X_eps) is nonzero": bool(value),
        "tau_2(X_mu + X_eps) is killed by Delta+(l)": all(not value.act(model.x(b)) for b in case.delta_l_plus),
    }


def vgamma_lowest_vectors(case: ParabolicCase) -> list[TensorElement]:
    return lowest_vectors(case, case.gamma)


@dataclass(frozen=True)
class ExplorationResult:
    constituent: SpecialConstituent
    lowest: Optional[TensorElement]
    operator: UEAElement
    bracket: UEAElement


def explore_constituent(case: ParabolicCase, sc: SpecialConstituent) -> ExplorationResult:
    """Raw Omega_2 image and bracket with X_mu for a constituent without closed form."""
    candidates = lowest_vectors(case, sc.nu)
    model = case.model
    for y in candidates:
        operator = omega_operator(case, 2, y)
        if operator:
            bracket = bracket_at_identity(case, model.x(case.mu), operator)
            logger.info("%s: exploratory bracket for nu=%s: %s", case.label, format_root(sc.nu), bracket)
            return ExplorationResult(sc, y, operator, bracket)
    logger.warning("%s: no lowest vector of weight -%s survives tau_2", case.label, format_root(sc.nu))
    return ExplorationResult(sc, candidates[0] if candidates else None, UEAElement(model), UEAElement(model))
