"""Sparse elements of g and g (x) g over a fixed LieAlgebraModel.

A basis label is either a root tuple (the root vector X_root) or an int i
(the Cartan element H_(alpha_(i+1)), 0-based).
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Callable, Iterable, Iterator, Mapping, Union

from ..utils.errors import ModelMismatchError
from ..utils.scalars import ZERO, QuadExt
from ..utils.types import Root

if TYPE_CHECKING:
    from .cores import LieAlgebraModel

__all__ = ["Label", "label_key", "format_label", "AlgebraElement", "TensorElement"]

Label = Union[Root, int]


def label_key(label: Label) -> tuple:
    if isinstance(label, int):
        return (0, (label,))
    return (1, label)


def format_label(label: Label) -> str:
    if isinstance(label, int):
        return f"H{label + 1}"
    return "X(" + ",".join(str(c) for c in label) + ")"


def _accumulate(target: dict, key, value) -> None:
    new = target.get(key, ZERO) + value
    if new:
        target[key] = new
    else:
        target.pop(key, None)


class AlgebraElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "LieAlgebraModel", terms: Mapping[Label, object] | Iterable = ()) -> None:
        self.algebra = algebra
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.terms: dict[Label, QuadExt] = {}
        for label, c in items:
            c = QuadExt.coerce(c)
            if c:
                self.terms[label] = c

    @classmethod
    def basis(cls, algebra: "LieAlgebraModel", label: Label) -> AlgebraElement:
        return cls(algebra, {label: 1})

    def _check(self, other: AlgebraElement) -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"Expected an AlgebraElement, got {other!r}")
        if other.algebra is not self.algebra:
            raise ModelMismatchError(f"Elements over different models: {self.algebra} and {other.algebra}")

    def __iter__(self) -> Iterator[tuple[Label, QuadExt]]:
        return iter(sorted(self.terms.items(), key=lambda kv: label_key(kv[0])))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def coefficient(self, label: Label) -> QuadExt:
        return self.terms.get(label, ZERO)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        out = dict(self.terms)
        for label, c in other.terms.items():
            _accumulate(out, label, c)
        return AlgebraElement(self.algebra, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, scalar) -> AlgebraElement:
        if isinstance(scalar, (AlgebraElement, TensorElement)):
            return NotImplemented
        return AlgebraElement(self.algebra, {k: v * scalar for k, v in self.terms.items()})

    __rmul__ = __mul__

    def bracket(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        out: dict[Label, QuadExt] = {}
        for la, ca in self.terms.items():
            for lb, cb in other.terms.items():
                for lc, cc in self.algebra.bracket_basis(la, lb).items():
                    _accumulate(out, lc, ca * cb * cc)
        return AlgebraElement(self.algebra, out)

    def filter(self, keep: Callable[[Label], bool]) -> AlgebraElement:
        return AlgebraElement(self.algebra, {k: v for k, v in self.terms.items() if keep(k)})

    def cartan_part(self) -> dict[int, QuadExt]:
        return {k: v for k, v in self.terms.items() if isinstance(k, int)}

    def root_part(self) -> dict[Root, QuadExt]:
        return {k: v for k, v in self.terms.items() if not isinstance(k, int)}

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})·{format_label(label)}" for label, c in self)


class TensorElement:
    """Sum of c · A (x) B over pairs of basis labels."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "LieAlgebraModel", terms: Mapping[tuple[Label, Label], object] | Iterable = ()) -> None:
        self.algebra = algebra
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.terms: dict[tuple[Label, Label], QuadExt] = {}
        for key, c in items:
            c = QuadExt.coerce(c)
            if c:
                _accumulate(self.terms, key, c)

    def _check(self, other) -> None:
        if getattr(other, "algebra", None) is not self.algebra:
            raise ModelMismatchError(f"Elements over different models: {self.algebra} and {getattr(other, 'algebra', None)}")

    def __iter__(self) -> Iterator[tuple[tuple[Label, Label], QuadExt]]:
        return iter(sorted(self.terms.items(), key=lambda kv: (label_key(kv[0][0]), label_key(kv[0][1]))))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __add__(self, other: TensorElement) -> TensorElement:
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            _accumulate(out, key, c)
        return TensorElement(self.algebra, out)

    def __neg__(self) -> TensorElement:
        return TensorElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def __mul__(self, scalar) -> TensorElement:
        if isinstance(scalar, (AlgebraElement, TensorElement)):
            return NotImplemented
        return TensorElement(self.algebra, {k: v * scalar for k, v in self.terms.items()})

    __rmul__ = __mul__

    def act_left(self, z: AlgebraElement) -> TensorElement:
        """(ad z (x) Id) applied to self."""
        self._check(z)
        out: dict = {}
        bb = self.algebra.bracket_basis
        for (la, lb), c in self.terms.items():
            for lz, cz in z.terms.items():
                for lc, cc in bb(lz, la).items():
                    _accumulate(out, (lc, lb), c * cz * cc)
        return TensorElement(self.algebra, out)

    def act_right(self, z: AlgebraElement) -> TensorElement:
        """(Id (x) ad z) applied to self."""
        self._check(z)
        out: dict = {}
        bb = self.algebra.bracket_basis
        for (la, lb), c in self.terms.items():
            for lz, cz in z.terms.items():
                for lc, cc in bb(lz, lb).items():
                    _accumulate(out, (la, lc), c * cz * cc)
        return TensorElement(self.algebra, out)

    def act(self, z: AlgebraElement) -> TensorElement:
        """Diagonal adjoint action (ad z (x) Id + Id (x) ad z)."""
        return self.act_left(z) + self.act_right(z)

    def weight(self) -> Root | None:
        """Common h*-weight of all terms, or None when the element is not a weight vector."""
        weights = {self.algebra.weight_of(a, b) for a, b in self.terms}
        return weights.pop() if len(weights) == 1 else None

    def pair(self, other: TensorElement) -> QuadExt:
        """kappa (x) kappa pairing."""
        self._check(other)
        kp = self.algebra.killing_basis
        total = ZERO
        for (a, b), c in self.terms.items():
            for (a2, b2), d in other.terms.items():
                k1 = kp(a, a2)
                if k1:
                    k2 = kp(b, b2)
                    if k2:
                        total = total + c * d * k1 * k2
        return total

    def __repr__(self) -> str:
        return f"TensorElement({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})·{format_label(a)}⊗{format_label(b)}" for (a, b), c in self)
