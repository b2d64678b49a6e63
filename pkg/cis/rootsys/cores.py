import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import networkx as nx

from ..utils.errors import InvalidAlgebraError, NotARootError
from ..utils.linalg import inverse
from ..utils.types import LONG_ROOT_NORM, Family, Root, Weight

__all__ = [
    "AlgebraType",
    "RootSystem",
    "build_root_system",
    "root_string",
    "root_string_report",
    "fundamental_weight",
    "dynkin_graph",
    "format_root",
]

logger = logging.getLogger(__name__)

_LABEL_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@dataclass(frozen=True)
class AlgebraType:
    """Cartan type of a complex simple Lie algebra, e.g. ``AlgebraType(Family.E, 6)``."""

    family: Family
    rank: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            try:
                object.__setattr__(self, "family", Family(str(self.family).upper()))
            except ValueError:
                raise InvalidAlgebraError(f"Unknown family {self.family!r}") from None
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidAlgebraError(f"Rank must be an integer, got {self.rank!r}")
        f, n = self.family, self.rank
        valid = {
            Family.A: n >= 1,
            Family.B: n >= 2,
            Family.C: n >= 2,
            Family.D: n >= 3,
            Family.E: n in (6, 7, 8),
            Family.F: n == 4,
            Family.G: n == 2,
        }[f]
        if not valid:
            raise InvalidAlgebraError(f"Invalid rank {n} for family {f.value}")

    @classmethod
    def parse(cls, text: str) -> "AlgebraType":
        m = _LABEL_RE.match(text)
        if m is None:
            raise InvalidAlgebraError(f"Cannot parse algebra type {text!r}")
        return cls(Family(m.group(1).upper()), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"


def _simple_norms(t: AlgebraType) -> list[Fraction]:
    n = t.rank
    long = LONG_ROOT_NORM
    match t.family:
        case Family.B:
            return [long] * (n - 1) + [long / 2]
        case Family.C:
            return [long / 2] * (n - 1) + [long]
        case Family.F:
            return [long, long, long / 2, long / 2]
        case Family.G:
            return [long / 3, long]
        case _:
            return [long] * n


def _dynkin_edges(t: AlgebraType) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram, 0-based, Bourbaki numbering."""
    n = t.rank
    match t.family:
        case Family.D:
            return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        case Family.E:
            return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
        case _:
            return [(i, i + 1) for i in range(n - 1)]


def dynkin_graph(t: AlgebraType) -> nx.Graph:
    """Dynkin diagram with nodes labelled 1..rank and the squared length on each node."""
    g = nx.Graph()
    for i, d in enumerate(_simple_norms(t), start=1):
        g.add_node(i, norm=d)
    g.add_edges_from((i + 1, j + 1) for i, j in _dynkin_edges(t))
    return g


@dataclass(frozen=True)
class RootSystem:
    """Root system in simple-root coordinates.

    ``gram[i][j]`` is the invariant form on simple roots with long roots of squared
    length 2; ``cartan_matrix[i][j] = <alpha_j, alpha_i^vee>``. Positive roots are
    ordered by height, then lexicographically.
    """

    algebra_type: AlgebraType
    gram: tuple[tuple[Fraction, ...], ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    fundamental_weights: tuple[Weight, ...]
    _order: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_order", {r: k for k, r in enumerate(self.positive_roots)})

    @property
    def rank(self) -> int:
        return self.algebra_type.rank

    @property
    def family(self) -> Family:
        return self.algebra_type.family

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def negative_roots(self) -> tuple[Root, ...]:
        return tuple(tuple(-c for c in r) for r in self.positive_roots)

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        return self.positive_roots + self.negative_roots

    @cached_property
    def _root_set(self) -> frozenset:
        return frozenset(self.roots)

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @property
    def dimension(self) -> int:
        return len(self.roots) + self.rank

    def simple_root(self, i: int) -> Root:
        """alpha_i, 1-based."""
        self._check_index(i)
        return self.simple_roots[i - 1]

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise InvalidAlgebraError(f"Simple root index {i} out of range 1..{self.rank} for {self.algebra_type}")

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._root_set

    @staticmethod
    def is_positive(r: Root) -> bool:
        return any(c > 0 for c in r)

    @staticmethod
    def height(r: Root) -> int:
        return sum(r)

    def order_index(self, r: Root) -> int:
        """Position of r (or of -r for a negative root) in the positive-root order."""
        if r in self._order:
            return self._order[r]
        neg = tuple(-c for c in r)
        if neg in self._order:
            return self._order[neg]
        raise NotARootError(f"{format_root(r)} is not a root of {self.algebra_type}")

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.gram
        total = Fraction(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = g[i]
            for j, yj in enumerate(y):
                if yj:
                    total += xi * row[j] * yj
        return total

    def norm(self, x: Sequence) -> Fraction:
        return self.inner(x, x)

    def is_long(self, r: Root) -> bool:
        return self.norm(r) == LONG_ROOT_NORM

    def pairing(self, x: Sequence, a: Root) -> Fraction:
        """<x, a^vee> = 2<x, a>/<a, a>."""
        return 2 * self.inner(x, a) / self.norm(a)

    def coroot_pairing(self, x: Sequence, j: int) -> Fraction:
        """<x, alpha_j^vee> with j 0-based."""
        g = self.gram
        return 2 * sum((xi * g[i][j] for i, xi in enumerate(x) if xi), Fraction(0)) / g[j][j]


def _generate_positive_roots(n: int, cartan: Sequence[Sequence[int]]) -> list[Root]:
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simples)
    layer = list(simples)
    out = list(simples)
    while layer:
        nxt: set[Root] = set()
        for beta in layer:
            for j in range(n):
                pair = sum(beta[k] * cartan[j][k] for k in range(n))
                p, down = 0, list(beta)
                while True:
                    down[j] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pair > 0:
                    up = list(beta)
                    up[j] += 1
                    up = tuple(up)
                    if up not in found:
                        nxt.add(up)
        found |= nxt
        layer = sorted(nxt)
        out.extend(layer)
    return sorted(out, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build_root_system(t: AlgebraType) -> RootSystem:
    n = t.rank
    d = _simple_norms(t)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = d[i]
    for i, j in _dynkin_edges(t):
        gram[i][j] = gram[j][i] = -max(d[i], d[j]) / 2
    cartan = [[int(2 * gram[i][j] / gram[i][i]) for j in range(n)] for i in range(n)]

    positive = _generate_positive_roots(n, cartan)

    # lambda_i = sum_k c_ik alpha_k with sum_k c_ik <alpha_k, alpha_j^vee> = delta_ij
    m = [[2 * gram[k][j] / gram[j][j] for j in range(n)] for k in range(n)]
    weights = tuple(tuple(row) for row in inverse(m))

    rs = RootSystem(
        algebra_type=t,
        gram=tuple(tuple(row) for row in gram),
        cartan_matrix=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(positive),
        fundamental_weights=weights,
    )
    logger.info("built root system %s with %d positive roots", t, len(positive))
    return rs


def root_string(rs: RootSystem, alpha: Root, beta: Root) -> tuple[int, int]:
    """(p, q): the alpha-string through beta is beta - p alpha, ..., beta + q alpha."""
    alpha, beta = tuple(alpha), tuple(beta)
    for r in (alpha, beta):
        if not rs.is_root(r):
            raise NotARootError(f"{format_root(r)} is not a root of {rs.algebra_type}")
    if beta == alpha or beta == tuple(-c for c in alpha):
        raise NotARootError(f"root string undefined for beta = +-alpha ({format_root(alpha)})")

    def run(sign: int) -> int:
        j = 0
        while rs.is_root(tuple(b + sign * (j + 1) * a for a, b in zip(alpha, beta))):
            j += 1
        return j

    return run(-1), run(+1)


def root_string_report(rs: RootSystem) -> dict[str, bool]:
    """String identities over all pairs beta != +-alpha; the last four only for long alpha."""
    checks = {
        "p - q = <beta, alpha^vee>": True,
        "long alpha: beta - alpha a root gives <beta, alpha^vee> = 1": True,
        "long alpha: beta + alpha a root gives <beta, alpha^vee> = -1": True,
        "long alpha: beta - alpha and beta + alpha are not both roots": True,
        "long alpha: beta +- 2 alpha is not a root": True,
    }
    names = list(checks)
    for a in rs.roots:
        neg_a = tuple(-c for c in a)
        long = rs.is_long(a)
        for b in rs.roots:
            if b == a or b == neg_a:
                continue
            p, q = root_string(rs, a, b)
            n = rs.pairing(b, a)
            if p - q != n:
                checks[names[0]] = False
            if not long:
                continue
            down = rs.is_root(tuple(y - x for x, y in zip(a, b)))
            up = rs.is_root(tuple(y + x for x, y in zip(a, b)))
            if down and n != 1:
                checks[names[1]] = False
            if up and n != -1:
                checks[names[2]] = False
            if down and up:
                checks[names[3]] = False
            if p > 1 or q > 1:
                checks[names[4]] = False
    return checks


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    """lambda_i in simple-root coordinates, 1-based index."""
    rs._check_index(i)
    return rs.fundamental_weights[i - 1]


def format_root(coords: Iterable) -> str:
    """"(1,2,2,3,2,1)" style, the way exceptional roots are tabulated."""
    return "(" + ",".join(str(c) for c in coords) + ")"
