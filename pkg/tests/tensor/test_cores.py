from fractions import Fraction

import pytest

from cis.chevalley.cores import build_model
from cis.parabolic.cores import case_from_label
from cis.reference import expected_constituents, expected_decomposition
from cis.rootsys.cores import AlgebraType, fundamental_weight
from cis.tensor.cores import (
    decomposition_dimensions,
    delta_nu,
    klimyk_decompose,
    lgamma_decomposition,
    omega_root_data,
    special_constituents,
    wedge2_highest_vectors,
)
from cis.tensor.lemmas import constituent_lemmas
from cis.tensor.weyl import WeightSystem, as_weight, freudenthal
from cis.utils.errors import NoClosedFormError
from cis.utils.types import ConstituentSource, ConstituentType

CASES = ["B5(3)", "B6(5)", "B6(6)", "C4(2)", "C5(3)", "D6(3)", "D7(4)", "F4(4)", "E6(3)", "E6(5)"]


def test_klimyk_a2():
    m = build_model(AlgebraType.parse("A2"))
    rs = m.root_system
    l1, l2 = fundamental_weight(rs, 1), fundamental_weight(rs, 2)
    dec = klimyk_decompose(m, (1, 2), l1, freudenthal(rs, (1, 2), l1))
    assert dec.highest_weights == [tuple(2 * c for c in l1), l2]
    assert dec.multiplicity_free


@pytest.mark.parametrize(
    "label, levi, hw",
    [
        ("A2", (1, 2), (1, 1)),
        ("A2", (1, 2), (0, 0)),
        ("B3", (2, 3), (1, 2, 2)),
        ("C4", (1, 2, 3), (2, 2, 2, 1)),
    ],
)
def test_klimyk_trivial_factor_is_a_unit(label: str, levi, hw):
    m = build_model(AlgebraType.parse(label))
    dec = klimyk_decompose(m, levi, hw, WeightSystem.trivial(m.rank))
    assert dec.constituents == ((as_weight(hw), 1),)


def test_klimyk_adjoint_square_has_multiplicity():
    m = build_model(AlgebraType.parse("A2"))
    rs = m.root_system
    dec = klimyk_decompose(m, (1, 2), (1, 1), freudenthal(rs, (1, 2), (1, 1)))
    assert dict(dec.constituents)[(Fraction(1), Fraction(1))] == 2
    assert not dec.multiplicity_free


@pytest.mark.parametrize("label", CASES)
def test_lgamma_decomposition(label: str):
    case = case_from_label(label)
    dec = lgamma_decomposition(case)
    assert dec.roots() == expected_decomposition(case.spec)
    assert dec.multiplicity_free
    total, expected = decomposition_dimensions(case, dec)
    assert total == expected


@pytest.mark.parametrize("label", CASES)
def test_special_constituents(label: str):
    case = case_from_label(label)
    got = [(sc.source, sc.nu, sc.epsilon, sc.kind) for sc in special_constituents(case)]
    want = [(row.source, row.nu, row.epsilon, row.kind) for row in expected_constituents(case.spec)]
    assert got == want


@pytest.mark.parametrize(
    "label, kinds",
    [
        ("B5(3)", [ConstituentType.TYPE_1A, ConstituentType.TYPE_1A]),
        ("B6(5)", [ConstituentType.TYPE_1A, ConstituentType.TYPE_1B]),
        ("B6(6)", [ConstituentType.TYPE_2]),
        ("C4(2)", [ConstituentType.TYPE_3, ConstituentType.TYPE_2]),
        ("F4(4)", [ConstituentType.TYPE_2]),
    ],
)
def test_constituent_types(label: str, kinds):
    assert [sc.kind for sc in special_constituents(case_from_label(label))] == kinds


def test_delta_nu_counts():
    case = case_from_label("D6(3)")
    sc = special_constituents(case)[0]
    assert sc.source is ConstituentSource.LGAMMA
    assert len(delta_nu(case, sc.nu, case.delta_g1)) == 6
    case = case_from_label("B7(3)")
    sc = special_constituents(case)[0]
    assert len(delta_nu(case, sc.nu, case.delta_g1)) == 9


def test_omega_root_data():
    case = case_from_label("B5(3)")
    for sc in special_constituents(case):
        data = omega_root_data(case, sc)
        assert data.c_mue.sign() > 0
        assert all(data.theta[data.theta[b]] == b for b in data.delta_g1)


def test_no_closed_form():
    case = case_from_label("C4(2)")
    with pytest.raises(NoClosedFormError):
        omega_root_data(case, special_constituents(case)[0])


@pytest.mark.parametrize("label", ["B5(3)", "C4(2)", "D6(3)", "F4(4)"])
def test_wedge2_highest_vectors(label: str):
    case = case_from_label(label)
    vectors = wedge2_highest_vectors(case)
    assert vectors
    assert all(vectors)


@pytest.mark.parametrize("label", CASES)
def test_constituent_lemmas(label: str):
    case = case_from_label(label)
    for sc in special_constituents(case):
        report = constituent_lemmas(case, sc)
        assert all(report.values()), [name for name, ok in report.items() if not ok]
