from fractions import Fraction

import pytest

from cis.utils import linalg
from cis.utils.linalg import EchelonBasis, inverse, kernel, rank, reduce_spoly_vector
from cis.utils.scalars import QuadExt, SPoly


def test_echelon_insert_and_express():
    basis = EchelonBasis()
    assert basis.insert({"x": 1, "y": 1}, {"u": 1})
    assert basis.insert({"y": 1, "z": 2}, {"v": 1})
    assert not basis.insert({"x": 1, "y": 2, "z": 2})
    assert len(basis) == 2
    assert basis.contains({"x": 2, "y": 3, "z": 2})
    assert not basis.contains({"z": 1})
    assert basis.express({"x": 1, "y": 2, "z": 2}) == {"u": 1, "v": 1}
    assert basis.express({"z": 1}) is None


def test_echelon_over_quadratic_field():
    r2 = QuadExt(0, 1)
    basis = EchelonBasis()
    basis.insert({"a": r2, "b": 1})
    assert basis.contains({"a": 2, "b": r2})
    assert not basis.contains({"a": 1, "b": 1})


def test_kernel():
    images = [{"e1": 1}, {"e2": 1}, {"e1": 1, "e2": 1}, {}]
    relations = kernel(images)
    assert len(relations) == 2
    for rel in relations:
        total: dict = {}
        for i, c in rel.items():
            for k, v in images[i].items():
                total[k] = total.get(k, 0) + c * v
        assert all(v == 0 for v in total.values())


@pytest.mark.parametrize(
    "matrix",
    [
        [[2, -1], [-1, 2]],
        [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
        [[1, 2, 3], [0, 1, 4], [5, 6, 0]],
    ],
)
def test_inverse(matrix):
    inv = inverse(matrix)
    n = len(matrix)
    for i in range(n):
        for j in range(n):
            assert sum(Fraction(matrix[i][k]) * inv[k][j] for k in range(n)) == (1 if i == j else 0)


def test_inverse_singular():
    with pytest.raises(ZeroDivisionError):
        inverse([[1, 2], [2, 4]])


def test_rank_and_spoly_reduction():
    assert rank([{"a": 1}, {"a": 2}, {"b": 1}]) == 2
    basis = EchelonBasis()
    basis.insert({"a": 1})
    vec = {"a": SPoly.linear(1, 3), "b": SPoly.s()}
    assert reduce_spoly_vector(basis, vec) == {"b": SPoly.s()}


def test_public_surface():
    assert sorted(linalg.__all__) == ["EchelonBasis", "add_scaled", "inverse", "kernel", "rank", "reduce_spoly_vector", "spoly_slices"]
    assert not hasattr(linalg, "SparseVector")
    assert not hasattr(EchelonBasis, "pivots")
    assert not hasattr(EchelonBasis, "rows")
