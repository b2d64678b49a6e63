import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping

from ..rootsys.cores import AlgebraType, RootSystem, build_root_system, format_root, root_string
from ..utils.errors import ConsistencyError, InvalidAlgebraError, ModelMismatchError, NotARootError
from ..utils.scalars import ONE, ZERO, QuadExt
from ..utils.types import Family, Root
from .layouts import AlgebraElement, Label, TensorElement, label_key

__all__ = [
    "chevalley_table",
    "StructureConstants",
    "build_constants",
    "LieAlgebraModel",
    "build_model",
    "bracket",
    "killing_pair",
    "check_normalization",
    "table_rows",
]

logger = logging.getLogger(__name__)


def _neg(r: Root) -> Root:
    return tuple(-c for c in r)


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def chevalley_table(rs: RootSystem) -> dict[tuple[Root, Root], int]:
    """Integral structure constants of a Chevalley basis, N_(a,b) = +-(p+1).

    Signs come from extraspecial pairs: for every positive non-simple root xi the
    pair (a1, xi - a1) with a1 smallest in the positive-root order gets
    N = +(p+1); everything else follows from the four-root and cyclic relations
    and N_(-a,-b) = -N_(a,b).
    """
    positive = rs.positive_roots
    is_pos = RootSystem.is_positive
    norm = rs.norm
    pos_table: dict[tuple[Root, Root], Fraction] = {}

    def n(x: Root, y: Root) -> Fraction:
        s = _add(x, y)
        if not rs.is_root(s):
            return Fraction(0)
        px, py = is_pos(x), is_pos(y)
        if px and py:
            return pos_table[(x, y)]
        if not px and not py:
            return -pos_table[(_neg(x), _neg(y))]
        z = _neg(s)
        if is_pos(z) == px:
            return norm(z) / norm(y) * n(z, x)
        return norm(z) / norm(x) * n(y, z)

    for xi in positive[rs.rank :]:
        pairs = []
        for a in positive:
            b = _sub(xi, a)
            if rs.is_root(b) and is_pos(b) and rs.order_index(a) < rs.order_index(b):
                pairs.append((a, b))
        a1, b1 = pairs[0]
        p, _ = root_string(rs, a1, b1)
        n11 = Fraction(p + 1)
        pos_table[(a1, b1)] = n11
        pos_table[(b1, a1)] = -n11
        for a, b in pairs[1:]:
            total = Fraction(0)
            d = _sub(b, a1)
            if rs.is_root(d):
                total += n(b, _neg(a1)) * n(a, _neg(b1)) / norm(d)
            d = _sub(a, a1)
            if rs.is_root(d):
                total += n(_neg(a1), a) * n(b, _neg(b1)) / norm(d)
            value = norm(xi) / n11 * total
            pos_table[(a, b)] = value
            pos_table[(b, a)] = -value

    table: dict[tuple[Root, Root], int] = {}
    for x in rs.roots:
        for y in rs.roots:
            if rs.is_root(_add(x, y)):
                v = n(x, y)
                if v.denominator != 1 or v == 0:
                    raise ConsistencyError(f"integrality: N{format_root(x)},{format_root(y)} = {v}")
                table[(x, y)] = int(v)
    logger.debug("chevalley table for %s: %d nonzero constants", rs.algebra_type, len(table))
    return table


@dataclass(frozen=True)
class StructureConstants:
    """N_(a,b) in the normalisation kappa(X_a, X_-a) = 1, [X_a, X_-a] = H_a.

    Pairs whose sum is not a root are absent from ``table``.
    """

    root_system: RootSystem
    table: Mapping[tuple[Root, Root], QuadExt]
    integer_table: Mapping[tuple[Root, Root], int]

    def n(self, a: Root, b: Root) -> QuadExt:
        return self.table.get((a, b), ZERO)

    @staticmethod
    def cartan_part(a: Root) -> dict[int, int]:
        """H_a = sum_k a_k H_(alpha_k)."""
        return {k: c for k, c in enumerate(a) if c}


def _rescale_factor(rs: RootSystem, r: Root) -> QuadExt:
    try:
        return QuadExt.sqrt_rational(rs.norm(r) / 2)
    except ValueError:
        raise InvalidAlgebraError(f"{rs.algebra_type}: rescaling needs sqrt({rs.norm(r) / 2}) outside Q(sqrt 2)") from None


def build_constants(rs: RootSystem) -> StructureConstants:
    if rs.family is Family.G:
        raise InvalidAlgebraError(f"{rs.algebra_type}: long/short ratio 3 has no normalised table over Q(sqrt 2)")
    integer = chevalley_table(rs)
    t = {r: _rescale_factor(rs, r) for r in rs.positive_roots}
    t.update({_neg(r): v for r, v in list(t.items())})
    table = {(a, b): v * t[a] * t[b] / t[_add(a, b)] for (a, b), v in integer.items()}
    logger.info("built structure constants for %s", rs.algebra_type)
    return StructureConstants(rs, table, integer)


class LieAlgebraModel:
    """g with basis {X_a : a in Delta} and {H_i = H_(alpha_i)}.

    [H_i, X_b] = <alpha_i, b> X_b, [X_a, X_-a] = H_a, [X_a, X_b] = N_(a,b) X_(a+b);
    kappa(X_a, X_-a) = 1 and kappa(H_i, H_j) = <alpha_i, alpha_j>.
    """

    def __init__(self, root_system: RootSystem, constants: StructureConstants) -> None:
        if constants.root_system is not root_system:
            raise ModelMismatchError(f"constants built for {constants.root_system.algebra_type}, not {root_system.algebra_type}")
        self.root_system = root_system
        self.constants = constants
        self._zero = tuple(0 for _ in range(root_system.rank))

    def __repr__(self) -> str:
        return f"LieAlgebraModel({self.root_system.algebra_type})"

    @property
    def algebra_type(self) -> AlgebraType:
        return self.root_system.algebra_type

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @cached_property
    def basis_labels(self) -> tuple[Label, ...]:
        return tuple(sorted(list(range(self.rank)) + list(self.root_system.roots), key=label_key))

    def n(self, a: Root, b: Root) -> QuadExt:
        return self.constants.n(a, b)

    def x(self, root: Root) -> AlgebraElement:
        root = tuple(root)
        if not self.root_system.is_root(root):
            raise NotARootError(f"{format_root(root)} is not a root of {self.algebra_type}")
        return AlgebraElement(self, {root: ONE})

    def h(self, i: int) -> AlgebraElement:
        """H_(alpha_(i+1)), 0-based."""
        return AlgebraElement(self, {i: ONE})

    def h_vector(self, v: Iterable) -> AlgebraElement:
        """H_v = sum_k v_k H_k."""
        return AlgebraElement(self, {k: c for k, c in enumerate(v) if c})

    def element(self, terms) -> AlgebraElement:
        return AlgebraElement(self, terms)

    def tensor(self, terms) -> TensorElement:
        return TensorElement(self, terms)

    def label_weight(self, label: Label) -> Root:
        return self._zero if isinstance(label, int) else label

    def weight_of(self, *labels: Label) -> Root:
        w = self._zero
        for label in labels:
            if not isinstance(label, int):
                w = _add(w, label)
        return w

    def bracket_basis(self, la: Label, lb: Label) -> dict[Label, QuadExt]:
        rs = self.root_system
        if isinstance(la, int):
            if isinstance(lb, int):
                return {}
            c = rs.inner(rs.simple_roots[la], lb)
            return {lb: QuadExt(c)} if c else {}
        if isinstance(lb, int):
            c = -rs.inner(rs.simple_roots[lb], la)
            return {la: QuadExt(c)} if c else {}
        s = _add(la, lb)
        if s == self._zero:
            return {k: QuadExt(c) for k, c in StructureConstants.cartan_part(la).items()}
        v = self.constants.table.get((la, lb))
        return {s: v} if v is not None else {}

    def killing_basis(self, la: Label, lb: Label) -> QuadExt:
        if isinstance(la, int):
            if isinstance(lb, int):
                return QuadExt(self.root_system.gram[la][lb])
            return ZERO
        if isinstance(lb, int):
            return ZERO
        return ONE if _add(la, lb) == self._zero else ZERO

    def bracket(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        for e in (x, y):
            if e.algebra is not self:
                raise ModelMismatchError(f"element over {e.algebra} used with {self}")
        return x.bracket(y)

    def killing_pair(self, x: AlgebraElement, y: AlgebraElement) -> QuadExt:
        for e in (x, y):
            if e.algebra is not self:
                raise ModelMismatchError(f"element over {e.algebra} used with {self}")
        total = ZERO
        for la, ca in x.terms.items():
            for lb, cb in y.terms.items():
                k = self.killing_basis(la, lb)
                if k:
                    total = total + ca * cb * k
        return total


@lru_cache(maxsize=None)
def build_model(t: AlgebraType) -> LieAlgebraModel:
    rs = build_root_system(t)
    return LieAlgebraModel(rs, build_constants(rs))


def bracket(m: LieAlgebraModel, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return m.bracket(x, y)


def killing_pair(m: LieAlgebraModel, x: AlgebraElement, y: AlgebraElement) -> QuadExt:
    return m.killing_pair(x, y)


def _fail(axiom: str, detail: str) -> None:
    raise ConsistencyError(f"{axiom} violated: {detail}")


def _jacobi_defect(m: LieAlgebraModel, a: Label, b: Label, c: Label) -> dict:
    out: dict = {}
    bb = m.bracket_basis
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        for l1, c1 in bb(y, z).items():
            for l2, c2 in bb(x, l1).items():
                v = out.get(l2, ZERO) + c1 * c2
                if v:
                    out[l2] = v
                else:
                    out.pop(l2, None)
    return out


def check_normalization(
    m: LieAlgebraModel,
    *,
    jacobi_samples: int | None = None,
    invariance_samples: int = 1000,
    seed: int = 0,
) -> None:
    """Assert the Chevalley relations, the pairing normalization, Jacobi and ad-invariance.

    With ``jacobi_samples=None`` the Jacobi identity is checked on every unordered
    basis triple, otherwise on that many random triples.
    """
    rs = m.root_system
    roots = rs.roots
    zero = m._zero

    for a in rs.positive_roots:
        na = _neg(a)
        h = m.bracket_basis(a, na)
        if h != {k: QuadExt(c) for k, c in enumerate(a) if c}:
            _fail("coroot bracket", f"[X{format_root(a)}, X{format_root(na)}] = {h}")
        ha = m.h_vector(a)
        for r, sign in ((a, 1), (na, -1)):
            got = ha.bracket(m.x(r))
            if got.terms != {r: QuadExt(sign * rs.norm(a))}:
                _fail("coroot action", f"[H{format_root(a)}, X{format_root(r)}] = {got}")
        if m.killing_basis(a, na) != ONE:
            _fail("pairing normalization", f"kappa(X{format_root(a)}, X{format_root(na)}) != 1")

    for a in rs.positive_roots:
        ha = m.h_vector(a)
        for b in roots:
            got = ha.bracket(m.x(b)).coefficient(b)
            if got != rs.inner(a, b):
                _fail("cartan action", f"[H{format_root(a)}, X{format_root(b)}] has coefficient {got}, expected {rs.inner(a, b)}")

    for a in roots:
        for b in roots:
            s = _add(a, b)
            if s == zero:
                continue
            nab = m.n(a, b)
            if not rs.is_root(s):
                if (a, b) in m.constants.table:
                    _fail("root support", f"N{format_root(a)},{format_root(b)} present but sum is not a root")
                continue
            if not nab:
                _fail("root support", f"N{format_root(a)},{format_root(b)} vanishes although the sum is a root")
            if nab != -m.n(b, a):
                _fail("antisymmetry", f"N{format_root(a)},{format_root(b)} != -N{format_root(b)},{format_root(a)}")
            p, q = root_string(rs, a, b)
            expected = -Fraction(q * (1 + p)) * rs.norm(a) / 2
            if nab * m.n(_neg(a), _neg(b)) != expected:
                _fail("root string product", f"N{format_root(a)},{format_root(b)} N_-a,-b != {expected}")
            c = _neg(s)
            if not (nab == m.n(b, c) == m.n(c, a)):
                _fail("cyclic symmetry", f"cyclic triple {format_root(a)}, {format_root(b)}, {format_root(c)}")

    labels = m.basis_labels
    if jacobi_samples is None:
        triples: Iterable = combinations_with_replacement(labels, 3)
    else:
        rng = random.Random(seed)
        triples = (tuple(rng.choice(labels) for _ in range(3)) for _ in range(jacobi_samples))
    for a, b, c in triples:
        d = _jacobi_defect(m, a, b, c)
        if d:
            _fail("Jacobi", f"triple {a}, {b}, {c} gives {d}")

    rng = random.Random(seed + 1)
    for _ in range(invariance_samples):
        a, b, c = (rng.choice(labels) for _ in range(3))
        left = sum((cc * m.killing_basis(l, c) for l, cc in m.bracket_basis(a, b).items()), ZERO)
        right = sum((cc * m.killing_basis(a, l) for l, cc in m.bracket_basis(b, c).items()), ZERO)
        if left != right:
            _fail("invariance", f"kappa([{a},{b}],{c}) != kappa({a},[{b},{c}])")
    logger.info("normalization checks passed for %s", rs.algebra_type)


def table_rows(m: LieAlgebraModel) -> list[tuple[str, str, str, str]]:
    """(alpha, beta, a, b) with N_(alpha,beta) = a + b sqrt 2, in root order."""
    rs = m.root_system

    def key(r: Root) -> tuple:
        return (not rs.is_positive(r), rs.order_index(r))

    rows = []
    for (a, b), v in sorted(m.constants.table.items(), key=lambda kv: (key(kv[0][0]), key(kv[0][1]))):
        rows.append((format_root(a), format_root(b), str(v.a), str(v.b)))
    return rows
