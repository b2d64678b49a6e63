"""Exact sparse linear algebra over Q and Q(sqrt 2).

Vectors are dictionaries from hashable coordinates to exact scalars with no explicit
zero entries. Reduction is row-echelon style: every stored row has a pivot
coordinate with coefficient 1 that appears in no other row.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Generic, Hashable, Iterable, Mapping, Sequence, TypeVar

from .scalars import SPoly

__all__ = [
    "EchelonBasis",
    "add_scaled",
    "kernel",
    "inverse",
    "reduce_spoly_vector",
    "spoly_slices",
    "rank",
]

K = TypeVar("K", bound=Hashable)


def add_scaled(target: dict, source: Mapping, factor: Any) -> dict:
    """target += factor * source, in place, dropping zeros."""
    if not factor:
        return target
    for key, value in source.items():
        new = target.get(key, 0) + factor * value
        if new:
            target[key] = new
        else:
            target.pop(key, None)
    return target


class EchelonBasis(Generic[K]):
    """Incrementally maintained reduced row-echelon basis of sparse vectors.

    ``pivot_key`` orders candidate pivots; the smallest coordinate of a remainder
    becomes its pivot. Each inserted vector may carry a tag vector (its expression
    in terms of caller-chosen generators) which is transformed alongside it.
    """

    def __init__(self, pivot_key: Callable[[K], Any] = repr) -> None:
        self._pivot_key = pivot_key
        self._rows: dict[K, tuple[dict, dict]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: Mapping[K, Any], tag: Mapping | None = None) -> tuple[dict, dict]:
        vec = dict(vec)
        tag = dict(tag or {})
        for pivot in [p for p in vec if p in self._rows]:
            factor = vec.get(pivot)
            if not factor:
                continue
            row, row_tag = self._rows[pivot]
            add_scaled(vec, row, -factor)
            add_scaled(tag, row_tag, -factor)
        return vec, tag

    def reduce(self, vec: Mapping[K, Any]) -> dict:
        return self._reduce(vec)[0]

    def contains(self, vec: Mapping[K, Any]) -> bool:
        return not self.reduce(vec)

    def express(self, vec: Mapping[K, Any]) -> dict | None:
        """Tag combination equal to ``vec``, or None when ``vec`` is outside the span."""
        rem, tag = self._reduce(vec)
        if rem:
            return None
        return {k: -v for k, v in tag.items()}

    def insert(self, vec: Mapping[K, Any], tag: Mapping | None = None) -> bool:
        """Add ``vec``; returns False (and changes nothing) when it is already in the span."""
        rem, rem_tag = self._reduce(vec, tag)
        if not rem:
            return False
        pivot = min(rem, key=self._pivot_key)
        inv = 1 / rem[pivot]
        rem = {k: v * inv for k, v in rem.items()}
        rem_tag = {k: v * inv for k, v in rem_tag.items()}
        for other_vec, other_tag in self._rows.values():
            factor = other_vec.get(pivot)
            if factor:
                add_scaled(other_vec, rem, -factor)
                add_scaled(other_tag, rem_tag, -factor)
        self._rows[pivot] = (rem, rem_tag)
        return True


def kernel(images: Sequence[Mapping[K, Any]], pivot_key: Callable[[K], Any] = repr) -> list[dict[int, Any]]:
    """Basis of {c : sum_i c_i images[i] = 0}, each as a sparse dict over indices."""
    basis: EchelonBasis[K] = EchelonBasis(pivot_key)
    relations: list[dict[int, Any]] = []
    for i, image in enumerate(images):
        rem, tag = basis._reduce(image, {i: 1})
        if rem:
            basis.insert(image, {i: 1})
        else:
            relations.append(tag)
    return relations


def inverse(matrix: Sequence[Sequence[Any]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse of a square rational matrix."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError(f"inverse needs a square matrix, got {n} rows of lengths {[len(r) for r in matrix]}")
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def spoly_slices(vec: Mapping[K, SPoly]) -> dict[int, dict[K, Any]]:
    """Split a vector with SPoly entries into its constant, linear, ... parts."""
    slices: dict[int, dict[K, Any]] = {}
    for key, poly in vec.items():
        for k, c in enumerate(poly.coefficients):
            if c:
                slices.setdefault(k, {})[key] = c
    return slices


def reduce_spoly_vector(basis: EchelonBasis[K], vec: Mapping[K, SPoly]) -> dict[K, SPoly]:
    """Remainder of ``vec`` modulo a constant basis, each s-degree reduced separately."""
    out: dict[K, list] = {}
    for k, part in spoly_slices(vec).items():
        for key, c in basis.reduce(part).items():
            out.setdefault(key, []).append((k, c))
    result: dict[K, SPoly] = {}
    for key, terms in out.items():
        coeffs: list[Any] = [0] * (max(k for k, _ in terms) + 1)
        for k, c in terms:
            coeffs[k] = c
        poly = SPoly(coeffs)
        if poly:
            result[key] = poly
    return result


def rank(vectors: Iterable[Mapping[K, Any]], pivot_key: Callable[[K], Any] = repr) -> int:
    basis: EchelonBasis[K] = EchelonBasis(pivot_key)
    for v in vectors:
        basis.insert(v)
    return len(basis)
