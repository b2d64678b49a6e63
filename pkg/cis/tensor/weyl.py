"""Weyl group tools for a Levi subsystem (given by 1-based simple-root indices).

Weights are ambient vectors in simple-root coordinates; only their pairings with
the Levi coroots matter for dominance and reflection.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..rootsys.cores import RootSystem
from ..utils.types import Root, Weight

__all__ = [
    "WeightSystem",
    "as_weight",
    "levi_positive_roots",
    "levi_rho",
    "reflect",
    "is_dominant",
    "dominant_conjugate",
    "weyl_dimension",
    "freudenthal",
    "weyl_orbit",
]


def as_weight(v: Iterable) -> Weight:
    return tuple(Fraction(c) for c in v)


@dataclass(frozen=True)
class WeightSystem:
    highest_weight: Weight
    weights: Mapping[Weight, int] = field(hash=False)

    @property
    def dimension(self) -> int:
        return sum(self.weights.values())

    @classmethod
    def from_roots(cls, highest: Root, roots: Iterable[Root]) -> "WeightSystem":
        return cls(as_weight(highest), {as_weight(r): 1 for r in roots})

    @classmethod
    def trivial(cls, rank: int) -> "WeightSystem":
        zero = as_weight([0] * rank)
        return cls(zero, {zero: 1})


def _zero_based(simples: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(j - 1 for j in simples))


def levi_positive_roots(rs: RootSystem, simples: Iterable[int]) -> tuple[Root, ...]:
    inside = set(_zero_based(simples))
    return tuple(r for r in rs.positive_roots if all(c == 0 or k in inside for k, c in enumerate(r)))


def levi_rho(rs: RootSystem, simples: Iterable[int]) -> Weight:
    total = [Fraction(0)] * rs.rank
    for r in levi_positive_roots(rs, simples):
        for k, c in enumerate(r):
            total[k] += Fraction(c, 2)
    return tuple(total)


def reflect(rs: RootSystem, w: Sequence, j: int) -> Weight:
    """s_j(w) for the 1-based simple root alpha_j."""
    p = rs.coroot_pairing(w, j - 1)
    out = list(as_weight(w))
    out[j - 1] -= p
    return tuple(out)


def is_dominant(rs: RootSystem, simples: Iterable[int], w: Sequence) -> bool:
    return all(rs.coroot_pairing(w, j) >= 0 for j in _zero_based(simples))


def dominant_conjugate(rs: RootSystem, simples: Iterable[int], w: Sequence) -> tuple[Weight, int]:
    """Dominant element of the Levi Weyl orbit of w and the number of reflections used."""
    idx = _zero_based(simples)
    w = as_weight(w)
    count = 0
    i = 0
    while i < len(idx):
        j = idx[i]
        if rs.coroot_pairing(w, j) < 0:
            w = reflect(rs, w, j + 1)
            count += 1
            i = 0
        else:
            i += 1
    return w, count


def weyl_dimension(rs: RootSystem, simples: Iterable[int], hw: Sequence) -> int:
    simples = tuple(simples)
    rho = levi_rho(rs, simples)
    shifted = tuple(a + b for a, b in zip(as_weight(hw), rho))
    num = Fraction(1)
    for a in levi_positive_roots(rs, simples):
        num *= rs.inner(shifted, a) / rs.inner(rho, a)
    if num.denominator != 1:
        raise ArithmeticError(f"Weyl dimension formula gave non-integer {num} for {hw}")
    return int(num)


def freudenthal(rs: RootSystem, simples: Iterable[int], hw: Sequence) -> WeightSystem:
    """All weights of the irreducible Levi module V(hw) with multiplicities."""
    simples = tuple(simples)
    idx = _zero_based(simples)
    hw = as_weight(hw)
    if not is_dominant(rs, simples, hw):
        raise ValueError(f"{hw} is not dominant for the Levi subsystem {sorted(simples)}")
    rho = levi_rho(rs, simples)
    positive = [(a, sum(a)) for a in levi_positive_roots(rs, simples)]
    top = rs.norm(tuple(a + b for a, b in zip(hw, rho)))

    mult: dict[Weight, int] = {hw: 1}
    layer = [hw]
    depth = 0
    while layer:
        depth += 1
        candidates = sorted({w[:j] + (w[j] - 1,) + w[j + 1 :] for w in layer for j in idx})
        layer = []
        for mu in candidates:
            denom = top - rs.norm(tuple(a + b for a, b in zip(mu, rho)))
            if denom == 0:
                continue
            s = Fraction(0)
            for a, height in positive:
                k = 1
                while k * height <= depth:
                    up = tuple(c + k * ac for c, ac in zip(mu, a))
                    m = mult.get(up)
                    if m:
                        s += m * rs.inner(up, a)
                    k += 1
            value = 2 * s / denom
            if value.denominator != 1 or value < 0:
                raise ArithmeticError(f"Freudenthal gave multiplicity {value} at {mu}")
            if value:
                mult[mu] = int(value)
                layer.append(mu)
    return WeightSystem(hw, mult)


def weyl_orbit(rs: RootSystem, simples: Iterable[int], w: Sequence) -> set[Weight]:
    simples = tuple(simples)
    start = as_weight(w)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for j in simples:
            nxt = reflect(rs, cur, j)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen
