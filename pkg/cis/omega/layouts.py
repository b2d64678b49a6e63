"""Polynomials on g(1) and PBW-ordered elements of U(n-bar)."""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping

from ..rootsys.cores import format_root
from ..utils.scalars import ZERO, QuadExt, SPoly
from ..utils.types import Root

if TYPE_CHECKING:
    from ..chevalley.cores import LieAlgebraModel

__all__ = ["Monomial", "Word", "PolyOnG1", "UEAElement", "normal_order"]

# sorted tuple of g(1) roots; eta_a eta_b is (a, b)
Monomial = tuple[Root, ...]
# letters are negative roots, X_(-a) written as the root -a
Word = tuple[Root, ...]


class PolyOnG1:
    """Homogeneous polynomial sum c * prod eta_a in the coordinates of X = sum eta_a X_a."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Monomial, object] = ()) -> None:
        self.degree = degree
        self.terms: dict[Monomial, QuadExt] = {}
        for mono, c in dict(terms).items():
            if len(mono) != degree:
                raise ValueError(f"monomial {mono} has degree {len(mono)}, expected {degree}")
            c = QuadExt.coerce(c)
            if c:
                self.terms[mono] = c

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyOnG1):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __iter__(self) -> Iterator[tuple[Monomial, QuadExt]]:
        return iter(sorted(self.terms.items()))

    def __call__(self, coordinates: Mapping[Root, object]) -> QuadExt:
        """Value at X = sum eta_a X_a with eta given by ``coordinates`` (missing roots are 0)."""
        total = ZERO
        for mono, c in self.terms.items():
            value = c
            for a in mono:
                value = value * QuadExt.coerce(coordinates.get(a, 0))
            total = total + value
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})·" + "·".join(f"η{format_root(a)}" for a in mono) for mono, c in self)

    __repr__ = __str__


@lru_cache(maxsize=None)
def _straighten(model: "LieAlgebraModel", word: Word) -> tuple[tuple[Word, QuadExt], ...]:
    order = model.root_system.order_index
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if order(a) > order(b):
            out: dict[Word, QuadExt] = {}
            for w, c in _straighten(model, word[:i] + (b, a) + word[i + 2 :]):
                out[w] = out.get(w, ZERO) + c
            n = model.n(a, b)
            if n:
                ab = tuple(x + y for x, y in zip(a, b))
                for w, c in _straighten(model, word[:i] + (ab,) + word[i + 2 :]):
                    out[w] = out.get(w, ZERO) + n * c
            return tuple((w, c) for w, c in out.items() if c)
    return ((word, QuadExt(1)),)


def normal_order(model: "LieAlgebraModel", word: Word) -> dict[Word, QuadExt]:
    """Rewrite a word in PBW order (letters nondecreasing in root order) using ab = ba + [a, b]."""
    return dict(_straighten(model, tuple(word)))


class UEAElement:
    """sum c(s) R(X_(-a1)) ... R(X_(-ak)) with PBW-ordered words and SPoly coefficients."""

    __slots__ = ("model", "terms")

    def __init__(self, model: "LieAlgebraModel", terms: Mapping[Word, object] | Iterable = (), *, ordered: bool = False) -> None:
        self.model = model
        self.terms: dict[Word, SPoly] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, c in items:
            c = c if isinstance(c, SPoly) else SPoly.constant(c)
            if not c:
                continue
            expansion = {tuple(word): QuadExt(1)} if ordered else normal_order(model, word)
            for w, k in expansion.items():
                new = self.terms.get(w, SPoly()) + c * k
                if new:
                    self.terms[w] = new
                else:
                    self.terms.pop(w, None)

    @classmethod
    def one(cls, model: "LieAlgebraModel") -> UEAElement:
        return cls(model, {(): 1}, ordered=True)

    @classmethod
    def letter(cls, model: "LieAlgebraModel", neg_root: Root, coefficient: object = 1) -> UEAElement:
        return cls(model, {(tuple(neg_root),): coefficient}, ordered=True)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self.model is other.model and self.terms == other.terms

    def __iter__(self) -> Iterator[tuple[Word, SPoly]]:
        order = self.model.root_system.order_index
        return iter(sorted(self.terms.items(), key=lambda kv: (len(kv[0]), [order(a) for a in kv[0]], kv[0])))

    def coefficient(self, word: Word) -> SPoly:
        return self.terms.get(tuple(word), SPoly())

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def words(self) -> list[Word]:
        return [w for w, _ in self]

    def weight(self, word: Word) -> Root:
        zero = tuple(0 for _ in range(self.model.rank))
        return tuple(sum(c) for c in zip(zero, *word)) if word else zero

    def __add__(self, other: UEAElement) -> UEAElement:
        out = dict(self.terms)
        for w, c in other.terms.items():
            new = out.get(w, SPoly()) + c
            if new:
                out[w] = new
            else:
                out.pop(w, None)
        return UEAElement(self.model, out, ordered=True)

    def __neg__(self) -> UEAElement:
        return UEAElement(self.model, {w: -c for w, c in self.terms.items()}, ordered=True)

    def __sub__(self, other: UEAElement) -> UEAElement:
        return self + (-other)

    def __mul__(self, other) -> UEAElement:
        if isinstance(other, UEAElement):
            out: dict[Word, SPoly] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    for w, k in normal_order(self.model, w1 + w2).items():
                        out[w] = out.get(w, SPoly()) + c1 * c2 * k
            return UEAElement(self.model, out, ordered=True)
        return UEAElement(self.model, {w: c * other for w, c in self.terms.items()}, ordered=True)

    def __rmul__(self, other) -> UEAElement:
        if isinstance(other, UEAElement):
            return other.__mul__(self)
        return self * other

    def evaluate(self, s) -> dict[Word, QuadExt]:
        """Coefficients at a concrete value of s."""
        out = {}
        for w, c in self.terms.items():
            v = c(s)
            if v:
                out[w] = v
        return out

    def constant_part(self) -> dict[Word, QuadExt]:
        return {w: c.coefficient(0) for w, c in self.terms.items() if c.coefficient(0)}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self:
            ops = "".join(f"R(X{format_root(a)})" for a in w) or "1"
            parts.append(f"({c})·{ops}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"UEAElement({self})"
