from fractions import Fraction

import pytest

from cis.parabolic.cores import ParabolicSpec
from cis.reference import EXCEPTIONAL_CASES, distinguished_roots, expected_constituents, quasi_heisenberg_indices, table_cases
from cis.rootsys.cores import AlgebraType
from cis.utils.errors import UnsupportedCaseError


@pytest.mark.parametrize(
    "label, indices",
    [
        ("B7", {3, 4, 5, 6, 7}),
        ("C6", {2, 3, 4, 5}),
        ("D8", {3, 4, 5, 6}),
        ("E6", {3, 5}),
        ("E7", {2, 6}),
        ("E8", {1}),
        ("F4", {4}),
        ("G2", set()),
        ("A5", set()),
    ],
)
def test_quasi_heisenberg_indices(label: str, indices: set):
    assert quasi_heisenberg_indices(AlgebraType.parse(label)) == frozenset(indices)


def test_table_cases():
    labels = [str(spec) for spec in table_cases()]
    assert len(labels) == 5 + 4 + 3 + len(EXCEPTIONAL_CASES)
    assert "D8(6)" not in labels
    assert labels[-len(EXCEPTIONAL_CASES) :] == list(EXCEPTIONAL_CASES)
    assert len(table_cases(largest_only=False)) == 12 + 9 + 6 + len(EXCEPTIONAL_CASES)
    assert [str(s) for s in table_cases({"C": (4,)})] == ["C4(2)", "C4(3)"] + list(EXCEPTIONAL_CASES)


@pytest.mark.parametrize("label", ["B4(1)", "D8(6)", "A5(2)"])
def test_no_reference_data(label: str):
    with pytest.raises(UnsupportedCaseError):
        distinguished_roots(ParabolicSpec.parse(label))


def test_classical_special_values():
    rows = expected_constituents(ParabolicSpec.parse("B7(3)"))
    assert [row.s_value for row in rows] == [Fraction(7, 2), 1]
    rows = expected_constituents(ParabolicSpec.parse("D8(3)"))
    assert [row.s_value for row in rows] == [4, 1]
    rows = expected_constituents(ParabolicSpec.parse("C6(3)"))
    assert [row.s_value for row in rows] == [None, -1]
