"""Exact scalars: rationals, the field Q(sqrt 2) and affine polynomials in s.

All values are immutable. Arithmetic mixes freely with ``int`` and ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import isqrt
from typing import Iterable, Union

from .errors import NotAffineError

__all__ = ["Rational", "QuadExt", "SPoly", "qext_arith", "spoly_root", "ZERO", "ONE"]

Rational = Fraction

_Coercible = Union[int, Fraction, "QuadExt"]


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def _parse_fraction(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    return Fraction(text)


@total_ordering
class QuadExt:
    """Element a + b*sqrt(2) of Q(sqrt 2)."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: int | Fraction | str = 0, b: int | Fraction | str = 0) -> None:
        self._a = Fraction(a)
        self._b = Fraction(b)

    @classmethod
    def _make(cls, a: Fraction, b: Fraction) -> QuadExt:
        obj = object.__new__(cls)
        obj._a = a
        obj._b = b
        return obj

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    @classmethod
    def coerce(cls, x: _Coercible) -> QuadExt:
        if isinstance(x, QuadExt):
            return x
        if isinstance(x, (int, Fraction)):
            return cls._make(Fraction(x), Fraction(0))
        raise TypeError(f"Object {x!r} cannot be converted to QuadExt")

    @classmethod
    def sqrt_rational(cls, q: int | Fraction) -> QuadExt:
        """Square root of a non-negative rational, provided it lies in Q(sqrt 2)."""
        q = Fraction(q)
        r = _rational_sqrt(q)
        if r is not None:
            return cls._make(r, Fraction(0))
        r = _rational_sqrt(q / 2)
        if r is not None:
            return cls._make(Fraction(0), r)
        raise ValueError(f"sqrt({q}) does not lie in Q(sqrt 2)")

    @classmethod
    def parse(cls, text: str) -> QuadExt:
        """Inverse of ``str``: accepts "a", "b√2" and "a+b√2" / "a-b√2"."""
        text = text.strip().replace("−", "-")
        if not text.endswith("√2"):
            return cls(_parse_fraction(text))
        body = text[: -len("√2")]
        split = max(body.rfind("+"), body.rfind("-"))
        if split <= 0:
            return cls(0, _parse_fraction(body))
        a = _parse_fraction(body[:split])
        b = _parse_fraction(body[split + 1 :])
        return cls(a, b if body[split] == "+" else -b)

    def __repr__(self) -> str:
        return f"QuadExt({self._a}, {self._b})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        if self._a == 0:
            return f"{self._b}√2"
        sign = "+" if self._b > 0 else "-"
        return f"{self._a}{sign}{abs(self._b)}√2"

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadExt):
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def sign(self) -> int:
        a, b = self._a, self._b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with 2 b^2
        dominant_a = a * a > 2 * b * b
        if a > 0:
            return 1 if dominant_a else -1
        return -1 if dominant_a else 1

    def __lt__(self, other: _Coercible) -> bool:
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).sign() < 0

    def __abs__(self) -> QuadExt:
        return -self if self.sign() < 0 else self

    def __neg__(self) -> QuadExt:
        return QuadExt._make(-self._a, -self._b)

    def __pos__(self) -> QuadExt:
        return self

    def __add__(self, other: _Coercible) -> QuadExt:
        if isinstance(other, QuadExt):
            return QuadExt._make(self._a + other._a, self._b + other._b)
        if isinstance(other, (int, Fraction)):
            return QuadExt._make(self._a + other, self._b)
        return NotImplemented

    def __radd__(self, other: _Coercible) -> QuadExt:
        return self + other

    def __sub__(self, other: _Coercible) -> QuadExt:
        if isinstance(other, QuadExt):
            return QuadExt._make(self._a - other._a, self._b - other._b)
        if isinstance(other, (int, Fraction)):
            return QuadExt._make(self._a - other, self._b)
        return NotImplemented

    def __rsub__(self, other: _Coercible) -> QuadExt:
        return (-self) + other

    def __mul__(self, other: _Coercible) -> QuadExt:
        if isinstance(other, QuadExt):
            a, b, c, d = self._a, self._b, other._a, other._b
            if b == 0 and d == 0:
                return QuadExt._make(a * c, b)
            return QuadExt._make(a * c + 2 * b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return QuadExt._make(self._a * other, self._b * other)
        return NotImplemented

    def __rmul__(self, other: _Coercible) -> QuadExt:
        return self * other

    def conjugate(self) -> QuadExt:
        return QuadExt._make(self._a, -self._b)

    def norm(self) -> Fraction:
        """Field norm a^2 - 2 b^2."""
        return self._a * self._a - 2 * self._b * self._b

    def inverse(self) -> QuadExt:
        if not self:
            raise ZeroDivisionError("QuadExt division by zero")
        if self._b == 0:
            return QuadExt._make(1 / self._a, self._b)
        n = self.norm()
        return QuadExt._make(self._a / n, -self._b / n)

    def __truediv__(self, other: _Coercible) -> QuadExt:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("QuadExt division by zero")
            return QuadExt._make(self._a / other, self._b / other)
        if isinstance(other, QuadExt):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: _Coercible) -> QuadExt:
        return QuadExt.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> QuadExt:
        if n < 0:
            return self.inverse() ** -n
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


ZERO = QuadExt._make(Fraction(0), Fraction(0))
ONE = QuadExt._make(Fraction(1), Fraction(0))


def qext_arith(x: _Coercible, y: _Coercible, op: str) -> QuadExt:
    x, y = QuadExt.coerce(x), QuadExt.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"Unknown operation {op!r}; expected add, sub, mul or div")


class SPoly:
    """Polynomial in the bundle parameter s with coefficients in Q(sqrt 2).

    ``coefficients[k]`` multiplies s**k; trailing zeros are stripped.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[_Coercible] = ()) -> None:
        coeffs = [QuadExt.coerce(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self._coefficients: tuple[QuadExt, ...] = tuple(coeffs)

    @classmethod
    def constant(cls, c: _Coercible) -> SPoly:
        return cls((c,))

    @classmethod
    def linear(cls, c0: _Coercible, c1: _Coercible) -> SPoly:
        return cls((c0, c1))

    @classmethod
    def s(cls) -> SPoly:
        return cls((0, 1))

    @property
    def coefficients(self) -> tuple[QuadExt, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self._coefficients) - 1

    def coefficient(self, k: int) -> QuadExt:
        return self._coefficients[k] if 0 <= k < len(self._coefficients) else ZERO

    def __bool__(self) -> bool:
        return bool(self._coefficients)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SPoly):
            return self._coefficients == other._coefficients
        if isinstance(other, (int, Fraction, QuadExt)):
            return self == SPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __repr__(self) -> str:
        return f"SPoly({[str(c) for c in self._coefficients]})"

    def __str__(self) -> str:
        if not self._coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self._coefficients):
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}·s")
            else:
                terms.append(f"{c}·s^{k}")
        return " + ".join(terms)

    @classmethod
    def parse(cls, text: str) -> SPoly:
        coeffs: dict[int, QuadExt] = {}
        for term in text.split(" + "):
            term = term.strip()
            if "·s" in term:
                c, _, power = term.partition("·s")
                k = int(power[1:]) if power.startswith("^") else 1
            else:
                c, k = term, 0
            coeffs[k] = coeffs.get(k, ZERO) + QuadExt.parse(c)
        top = max(coeffs, default=-1)
        return cls(coeffs.get(k, ZERO) for k in range(top + 1))

    @staticmethod
    def _coerce(other: object) -> SPoly | None:
        if isinstance(other, SPoly):
            return other
        if isinstance(other, (int, Fraction, QuadExt)):
            return SPoly.constant(other)
        return None

    def __add__(self, other: object) -> SPoly:
        o = SPoly._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self._coefficients), len(o._coefficients))
        return SPoly(self.coefficient(k) + o.coefficient(k) for k in range(n))

    def __radd__(self, other: object) -> SPoly:
        return self + other

    def __neg__(self) -> SPoly:
        return SPoly(-c for c in self._coefficients)

    def __sub__(self, other: object) -> SPoly:
        o = SPoly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> SPoly:
        return (-self) + other

    def __mul__(self, other: object) -> SPoly:
        if isinstance(other, (int, Fraction, QuadExt)):
            return SPoly(c * other for c in self._coefficients)
        if not isinstance(other, SPoly):
            return NotImplemented
        if not self or not other:
            return SPoly()
        out = [ZERO] * (len(self._coefficients) + len(other._coefficients) - 1)
        for i, c in enumerate(self._coefficients):
            for j, d in enumerate(other._coefficients):
                out[i + j] = out[i + j] + c * d
        return SPoly(out)

    def __rmul__(self, other: object) -> SPoly:
        return self * other

    def __truediv__(self, other: _Coercible) -> SPoly:
        inv = QuadExt.coerce(other).inverse()
        return SPoly(c * inv for c in self._coefficients)

    def __call__(self, s: _Coercible) -> QuadExt:
        s = QuadExt.coerce(s)
        value = ZERO
        for c in reversed(self._coefficients):
            value = value * s + c
        return value

    def root(self) -> QuadExt:
        """The unique zero of an affine polynomial."""
        if self.degree != 1:
            raise NotAffineError(f"not affine: {self} has degree {self.degree}")
        c0, c1 = self._coefficients
        if not c1:
            raise NotAffineError(f"not affine: leading coefficient of {self} vanishes")
        return -c0 / c1


def spoly_root(p: SPoly) -> QuadExt:
    return p.root()
