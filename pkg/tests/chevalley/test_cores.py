import pytest

from cis.chevalley.cores import build_model, check_normalization, table_rows
from cis.rootsys.cores import AlgebraType
from cis.utils.errors import InvalidAlgebraError, ModelMismatchError, NotARootError
from cis.utils.scalars import ONE, QuadExt


def _model(label: str):
    return build_model(AlgebraType.parse(label))


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "B3", "C3", "D4"])
def test_normalization_small(label: str):
    check_normalization(_model(label))


@pytest.mark.slow
@pytest.mark.parametrize("label", ["B5", "C5", "D6", "F4", "E6"])
def test_normalization_exhaustive(label: str):
    check_normalization(_model(label))


@pytest.mark.slow
@pytest.mark.parametrize("label", ["E7", "E8"])
def test_normalization_sampled(label: str):
    check_normalization(_model(label), jacobi_samples=10_000, invariance_samples=200)


def test_g2_has_no_table():
    with pytest.raises(InvalidAlgebraError):
        _model("G2")


def test_simply_laced_constants_are_units():
    m = _model("D4")
    assert set(m.constants.table.values()) == {ONE, -ONE}
    assert set(abs(v) for v in m.constants.integer_table.values()) == {1}


def test_b2_constants():
    m = _model("B2")
    assert m.constants.integer_table[((0, 1), (1, 0))] == 1
    assert m.constants.integer_table[((0, 1), (1, 1))] == 2
    assert m.n((0, 1), (1, 1)) == ONE
    assert m.n((1, 1), (0, 1)) == -ONE
    assert not m.n((1, 0), (1, 1))


def test_c3_constants_involve_sqrt2():
    m = _model("C3")
    assert any(not v.is_rational for v in m.constants.table.values())


def test_bracket_and_pairing():
    m = _model("A2")
    a, b = (1, 0), (0, 1)
    assert m.bracket(m.x(a), m.x((-1, 0))) == m.h_vector(a)
    assert m.bracket(m.h(0), m.x(b)) == m.x(b) * -1
    assert m.bracket(m.h(1), m.x(b)) == m.x(b) * 2
    assert m.killing_pair(m.x(a), m.x((-1, 0))) == ONE
    assert not m.killing_pair(m.x(a), m.x(a))
    assert m.killing_pair(m.h(0), m.h(1)) == QuadExt(-1)
    assert m.bracket(m.x(a), m.x(b)) == m.x((1, 1)) * m.n(a, b)


def test_model_mismatch():
    a2, a3 = _model("A2"), _model("A3")
    with pytest.raises(ModelMismatchError):
        a2.bracket(a2.x((1, 0)), a3.x((1, 0, 0)))
    with pytest.raises(ModelMismatchError):
        a3.killing_pair(a2.x((1, 0)), a2.x((-1, 0)))


def test_not_a_root():
    with pytest.raises(NotARootError):
        _model("A2").x((1, -1))


def test_table_rows():
    m = _model("B2")
    rows = table_rows(m)
    assert len(rows) == len(m.constants.table)
    assert ("(0,1)", "(1,1)", "1", "0") in rows
