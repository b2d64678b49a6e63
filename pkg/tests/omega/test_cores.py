import random
from fractions import Fraction

import pytest

from cis.omega.cores import (
    bracket_at_identity,
    build_omega2_lowest,
    conformal_certificate,
    explore_constituent,
    generate_system,
    lowest_vector,
    lowest_vectors,
    omega1_residuals,
    omega1_special_value,
    omega1_system,
    omega2_closed_form,
    omega_invariance_defect,
    omega_operator,
    omega_tensor,
    solve_special_value,
    straightness_defect,
    symmetrize,
    tau2_highest_vector,
    tau_equivariance_defect,
    tau_k,
    tau_tilde,
    vgamma_lowest_vectors,
)
from cis.omega.layouts import PolyOnG1, UEAElement
from cis.parabolic.cores import case_from_label
from cis.reference import expected_constituents
from cis.tensor.cores import special_constituents
from cis.utils.errors import ModelMismatchError, NoClosedFormError
from cis.utils.scalars import QuadExt, SPoly
from cis.utils.types import ConstituentType


def _neg(r):
    return tuple(-c for c in r)


def _closed_form_constituents(label: str):
    case = case_from_label(label)
    return case, [sc for sc in special_constituents(case) if sc.kind.has_closed_form]


def test_omega_tensor():
    case = case_from_label("B5(3)")
    omega = omega_tensor(case)
    assert len(omega) == len(case.delta_zn)
    assert omega.weight() == (0,) * 5


def test_tau_k_arguments():
    case = case_from_label("B5(3)")
    x_mu = case.model.x(case.mu)
    with pytest.raises(ValueError):
        tau_k(case, 3, x_mu)
    with pytest.raises(ValueError):
        tau_k(case, 1, case.model.h(0))
    with pytest.raises(ValueError):
        tau_k(case, 2, case.model.x(case.gamma))
    assert tau_k(case, 1, x_mu)
    assert not tau_k(case, 2, case.model.element({}))


@pytest.mark.parametrize("label", ["B5(3)", "C4(2)", "D6(3)", "F4(4)"])
def test_tau_tilde_is_the_pairing(label: str):
    case, constituents = _closed_form_constituents(label)
    rng = random.Random(7)
    model = case.model
    for _ in range(3):
        coords = {a: Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for a in case.delta_g1}
        x = model.element(coords)
        for sc in constituents:
            ystar = lowest_vector(case, sc)
            assert ystar.pair(tau_k(case, 2, x)) == tau_tilde(case, 2, ystar)(coords)
        for op in omega1_system(case)[:5]:
            assert op.ystar.pair(tau_k(case, 1, x)) == tau_tilde(case, 1, op.ystar)(coords)


def test_tau_tilde_rejects_foreign_vectors():
    case = case_from_label("B5(3)")
    ystar = case.model.tensor({(_neg(case.mu), _neg(case.mu)): 1})
    with pytest.raises(ModelMismatchError):
        tau_tilde(case, 2, ystar)


def test_symmetrize():
    case = case_from_label("D6(3)")
    a, b = case.delta_g1[0], case.delta_g1[1]
    op = symmetrize(case, PolyOnG1(2, {(a, b): 2}))
    assert op.degree == 2
    with pytest.raises(ValueError):
        symmetrize(case, PolyOnG1(3))


@pytest.mark.parametrize("label", ["B5(3)", "B6(6)", "C4(2)", "D6(3)", "D7(4)", "F4(4)", "E6(3)"])
def test_closed_form_operator(label: str):
    case, constituents = _closed_form_constituents(label)
    for sc in constituents:
        op = build_omega2_lowest(case, sc)
        assert op
        assert op == omega2_closed_form(case, sc)
        assert all(op.weight(w) == _neg(sc.nu) for w in op.words())
        assert op.degree == 2


def test_type_2_operator_is_a_square():
    case, (sc,) = _closed_form_constituents("F4(4)")
    assert sc.kind is ConstituentType.TYPE_2
    op = build_omega2_lowest(case, sc)
    assert op.words() == [(_neg(case.mu), _neg(case.mu))]


def test_type_1a_operator_words():
    case, constituents = _closed_form_constituents("D6(3)")
    op = build_omega2_lowest(case, constituents[0])
    assert len(op.words()) == 3


def test_bracket_degree_limit():
    case = case_from_label("B5(3)")
    w = (_neg(case.mu),) * 3
    with pytest.raises(ValueError):
        bracket_at_identity(case, case.model.x(case.mu), UEAElement(case.model, {w: 1}, ordered=True))


def test_bracket_of_square():
    case = case_from_label("F4(4)")
    model = case.model
    m = _neg(case.mu)
    square = UEAElement(model, {(m, m): 1}, ordered=True)
    norm = case.alpha_q_norm
    expected = UEAElement.letter(model, m, SPoly.linear(-norm, -norm))
    assert bracket_at_identity(case, model.x(case.mu), square) == expected


@pytest.mark.parametrize("label", ["B5(3)", pytest.param("E6(3)", marks=pytest.mark.slow)])
def test_bracket_is_jacobi_consistent(label: str):
    case, constituents = _closed_form_constituents(label)
    model = case.model
    rng = random.Random(7)
    letters = [_neg(b) for b in case.delta_g1 + case.delta_zn]
    operators = [build_omega2_lowest(case, constituents[0])]
    operators.append(UEAElement(model, {(rng.choice(letters), rng.choice(letters)): 1, (rng.choice(letters),): 2}))
    elements = [model.x(b) for b in rng.sample(case.delta_g1, 3) + rng.sample(case.delta_zn, 2) + rng.sample(case.delta_l, 2)]
    levi = [model.x(b) for b in rng.sample(case.delta_l, 3)]
    for D in operators:
        for z in levi:
            zd = bracket_at_identity(case, z, D)
            for y in elements:
                direct = bracket_at_identity(case, z.bracket(y), D)
                nested = bracket_at_identity(case, z, bracket_at_identity(case, y, D)) - bracket_at_identity(case, y, zd)
                assert direct == nested


def test_bracket_of_letter():
    case = case_from_label("B5(3)")
    model = case.model
    a = case.delta_g1[0]
    got = bracket_at_identity(case, model.x(a), UEAElement.letter(model, _neg(a)))
    assert got == UEAElement(model, {(): SPoly.linear(0, -case.alpha_q_norm / 2)}, ordered=True)


@pytest.mark.parametrize("label", ["B5(3)", "B6(5)", "B6(6)", "C4(2)", "C5(3)", "D6(3)", "D7(4)", "F4(4)", "E6(3)", "E6(5)"])
def test_special_values(label: str):
    case = case_from_label(label)
    for sc, row in zip(special_constituents(case), expected_constituents(case.spec)):
        if row.s_value is None:
            with pytest.raises(NoClosedFormError):
                solve_special_value(case, sc)
            continue
        result = solve_special_value(case, sc)
        assert result.s_value == row.s_value
        assert result.matches_closed_form
        assert result.prefactor.sign() < 0
        assert result.residual_direction == _neg(sc.epsilon)


@pytest.mark.slow
@pytest.mark.parametrize("label", ["E7(2)", "E7(6)", "E8(1)"])
def test_special_values_large(label: str):
    case = case_from_label(label)
    for sc, row in zip(special_constituents(case), expected_constituents(case.spec)):
        assert solve_special_value(case, sc).s_value == row.s_value


def test_special_value_counts():
    case, (lg, ln) = _closed_form_constituents("B7(3)")
    result = solve_special_value(case, lg)
    assert result.delta_nu_g1 == 9
    assert result.s_value == QuadExt(Fraction(7, 2))
    assert solve_special_value(case, ln).s_value == QuadExt(1)


@pytest.mark.parametrize("label", ["B5(3)", "C4(2)", "D6(3)", "F4(4)", "E6(3)"])
def test_omega1(label: str):
    case = case_from_label(label)
    system = omega1_system(case)
    assert len(system) == len(case.delta_g1)
    assert all(op.constant for op in system)
    assert all(p.degree == 1 for p in omega1_residuals(case, system))
    assert omega1_special_value(case, system) == 0


def test_generate_system_b5_3():
    case, (lg, ln) = _closed_form_constituents("B5(3)")
    system = generate_system(case, lg, build_omega2_lowest(case, lg))
    assert len(system) == 6
    assert len(generate_system(case, ln)) == 30


def test_certificate_b5_3():
    case, (lg, _) = _closed_form_constituents("B5(3)")
    system = generate_system(case, lg)
    s = solve_special_value(case, lg).s_value
    assert conformal_certificate(case, lg, s, system) == {"g(1)": True, "z(n)": True, "l": True}
    assert not conformal_certificate(case, lg, s + 1, system)["g(1)"]


@pytest.mark.slow
@pytest.mark.parametrize("label", ["B5(3)", "C4(2)", "D6(3)", "F4(4)", "E6(3)"])
def test_certificate_all_constituents(label: str):
    case, constituents = _closed_form_constituents(label)
    for sc in constituents:
        s = solve_special_value(case, sc).s_value
        assert all(conformal_certificate(case, sc, s).values())


@pytest.mark.parametrize("label", ["B5(3)", "C4(2)", "F4(4)"])
def test_invariance(label: str):
    case = case_from_label(label)
    assert omega_invariance_defect(case) == 0
    assert tau_equivariance_defect(case, 1, samples=3) == 0
    assert tau_equivariance_defect(case, 2, samples=3) == 0


@pytest.mark.parametrize("label", ["B5(3)", "B6(6)", "D6(3)", "F4(4)"])
def test_tau2_highest_vector(label: str):
    case, constituents = _closed_form_constituents(label)
    for sc in constituents:
        assert all(tau2_highest_vector(case, sc).values())


def test_lowest_vectors_contain_closed_form():
    case, (lg, _) = _closed_form_constituents("D6(3)")
    found = lowest_vectors(case, lg.nu)
    assert len(found) == 1
    y = lowest_vector(case, lg)
    assert omega_operator(case, 2, found[0]) != UEAElement(case.model)
    # both are lowest of the same weight, so proportional
    (key, c), *_ = y.terms.items()
    assert found[0] * (c / found[0].terms[key]) == y


def test_vgamma_is_invisible_to_tau2():
    case = case_from_label("B5(3)")
    vectors = vgamma_lowest_vectors(case)
    assert vectors
    assert not any(tau_tilde(case, 2, y) for y in vectors)


def test_straightness():
    case, constituents = _closed_form_constituents("D6(3)")
    for sc in constituents:
        assert straightness_defect(case, build_omega2_lowest(case, sc)) == 0


def test_explore_type_3():
    case = case_from_label("C4(2)")
    sc = special_constituents(case)[0]
    assert sc.kind is ConstituentType.TYPE_3
    result = explore_constituent(case, sc)
    assert result.constituent is sc
    assert result.lowest is not None
