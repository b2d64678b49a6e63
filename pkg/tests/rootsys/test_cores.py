from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from cis.reference import expected_highest_root
from cis.rootsys.cores import (
    AlgebraType,
    build_root_system,
    dynkin_graph,
    format_root,
    fundamental_weight,
    root_string,
    root_string_report,
)
from cis.utils.errors import InvalidAlgebraError, NotARootError


@pytest.mark.parametrize(
    "label, positive",
    [
        ("A5", 15),
        ("B2", 4),
        ("B7", 49),
        ("C6", 36),
        ("D8", 56),
        ("E6", 36),
        ("E7", 63),
        ("E8", 120),
        ("F4", 24),
        ("G2", 6),
    ],
)
def test_positive_root_count(label: str, positive: int):
    rs = build_root_system(AlgebraType.parse(label))
    assert len(rs.positive_roots) == positive
    assert rs.dimension == 2 * positive + rs.rank


@pytest.mark.parametrize("label", ["A5", "B7", "C6", "D8", "E6", "E7", "E8", "F4", "G2"])
def test_highest_root(label: str):
    t = AlgebraType.parse(label)
    assert build_root_system(t).highest_root == expected_highest_root(t)


def test_highest_root_strings():
    assert format_root(build_root_system(AlgebraType.parse("E8")).highest_root) == "(2,3,4,6,5,4,3,2)"
    assert format_root(build_root_system(AlgebraType.parse("G2")).highest_root) == "(3,2)"


def test_positive_roots_are_ordered_by_height():
    rs = build_root_system(AlgebraType.parse("F4"))
    heights = [sum(r) for r in rs.positive_roots]
    assert heights == sorted(heights)
    assert rs.simple_root(1) == (1, 0, 0, 0)
    assert rs.simple_root(4) == (0, 0, 0, 1)


@pytest.mark.parametrize(
    "label, norms",
    [
        ("B3", (2, 2, 1)),
        ("C3", (1, 1, 2)),
        ("F4", (2, 2, 1, 1)),
        ("G2", (Fraction(2, 3), 2)),
        ("E6", (2,) * 6),
    ],
)
def test_simple_root_norms(label: str, norms: tuple):
    rs = build_root_system(AlgebraType.parse(label))
    assert tuple(rs.norm(a) for a in rs.simple_roots) == norms


def test_cartan_matrix_b3():
    rs = build_root_system(AlgebraType.parse("B3"))
    assert rs.cartan_matrix == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))


@pytest.mark.parametrize(
    "label, alpha, beta, expected",
    [
        ("A2", (1, 0), (0, 1), (0, 1)),
        ("B2", (0, 1), (1, 0), (0, 2)),
        ("B2", (0, 1), (1, 2), (2, 0)),
        ("G2", (1, 0), (0, 1), (0, 3)),
    ],
)
def test_root_string(label: str, alpha, beta, expected):
    rs = build_root_system(AlgebraType.parse(label))
    assert root_string(rs, alpha, beta) == expected


def test_root_string_errors():
    rs = build_root_system(AlgebraType.parse("A2"))
    with pytest.raises(NotARootError):
        root_string(rs, (1, 0), (2, 0))
    with pytest.raises(NotARootError):
        root_string(rs, (1, 0), (-1, 0))


@pytest.mark.parametrize(
    "label",
    [
        "A4",
        "B5",
        "C5",
        "D6",
        "E6",
        "F4",
        "G2",
        pytest.param("E7", marks=pytest.mark.slow),
        pytest.param("E8", marks=pytest.mark.slow),
    ],
)
def test_root_string_identities(label: str):
    report = root_string_report(build_root_system(AlgebraType.parse(label)))
    assert len(report) == 5
    assert all(report.values()), [name for name, ok in report.items() if not ok]


@pytest.mark.parametrize("label", ["B3", "C4", "F4", "G2"])
def test_root_string_length_matches_coroot_pairing(label: str):
    rs = build_root_system(AlgebraType.parse(label))
    for a in rs.positive_roots:
        for b in rs.roots:
            if b in (a, tuple(-c for c in a)):
                continue
            p, q = root_string(rs, a, b)
            assert p - q == rs.pairing(b, a)
            if rs.is_long(a):
                assert p + q <= 1


@pytest.mark.parametrize(
    "label, i, weight",
    [
        ("A2", 1, (Fraction(2, 3), Fraction(1, 3))),
        ("B2", 1, (1, 1)),
        ("B2", 2, (Fraction(1, 2), 1)),
    ],
)
def test_fundamental_weight(label: str, i: int, weight):
    rs = build_root_system(AlgebraType.parse(label))
    assert fundamental_weight(rs, i) == tuple(Fraction(c) for c in weight)
    for j in range(rs.rank):
        assert rs.coroot_pairing(fundamental_weight(rs, i), j) == (1 if j == i - 1 else 0)


@pytest.mark.parametrize("text", ["B1", "D2", "E9", "F3", "G3", "H2", "A0"])
def test_invalid_types(text: str):
    with pytest.raises(InvalidAlgebraError):
        AlgebraType.parse(text)


def test_simple_root_index_range():
    rs = build_root_system(AlgebraType.parse("C4"))
    with pytest.raises(InvalidAlgebraError):
        rs.simple_root(0)
    with pytest.raises(InvalidAlgebraError):
        fundamental_weight(rs, 5)
    with pytest.raises(NotARootError):
        rs.order_index((1, 1, 1, 2))


def test_dynkin_graph_e6():
    g = dynkin_graph(AlgebraType.parse("E6"))
    assert nx.is_tree(g)
    assert g.degree[4] == 3
    assert sorted(g.neighbors(4)) == [2, 3, 5]


@pytest.mark.parametrize(
    "label, det",
    [("A5", 6), ("B7", 2), ("C6", 2), ("D8", 4), ("E6", 3), ("E7", 2), ("E8", 1), ("F4", 1), ("G2", 1)],
)
def test_cartan_determinant(label: str, det: int):
    rs = build_root_system(AlgebraType.parse(label))
    assert round(np.linalg.det(np.array(rs.cartan_matrix, dtype=float))) == det
    gram = np.array([[float(x) for x in row] for row in rs.gram])
    assert np.all(np.linalg.eigvalsh(gram) > 0)
