import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional

import networkx as nx

from ..chevalley.cores import LieAlgebraModel, build_model, chevalley_table
from ..chevalley.layouts import AlgebraElement, Label
from ..rootsys.cores import AlgebraType, RootSystem, build_root_system, dynkin_graph, format_root, fundamental_weight
from ..utils.errors import ConsistencyError, ExcludedCaseError, InvalidAlgebraError, UnsupportedCaseError
from ..utils.types import Family, Root, StepKind, Weight

__all__ = [
    "ParabolicSpec",
    "StepClassification",
    "ParabolicCase",
    "classify_step",
    "nilpotency_bruteforce",
    "build_case",
    "case_from_label",
]

logger = logging.getLogger(__name__)

_CASE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*\(\s*([\d\s,]+)\)\s*$")


@dataclass(frozen=True)
class ParabolicSpec:
    """Standard parabolic q_S of type T(i_1, ..., i_k); indices are 1-based."""

    algebra_type: AlgebraType
    subset: frozenset[int]

    def __post_init__(self):
        subset = frozenset(self.subset)
        object.__setattr__(self, "subset", subset)
        if not subset:
            raise InvalidAlgebraError("Parabolic subset S must be nonempty")
        bad = sorted(i for i in subset if not (isinstance(i, int) and 1 <= i <= self.algebra_type.rank))
        if bad:
            raise InvalidAlgebraError(f"Simple-root indices {bad} out of range 1..{self.algebra_type.rank} for {self.algebra_type}")

    @classmethod
    def parse(cls, label: str) -> "ParabolicSpec":
        """``B7(3)``, ``E6(5)``, ``A5(2,4)``."""
        m = _CASE_RE.match(label)
        if m is None:
            raise InvalidAlgebraError(f"Cannot parse case label {label!r}; expected e.g. B7(3)")
        t = AlgebraType(Family(m.group(1).upper()), int(m.group(2)))
        try:
            subset = frozenset(int(x) for x in m.group(3).split(",") if x.strip())
        except ValueError:
            raise InvalidAlgebraError(f"Bad subset in case label {label!r}") from None
        return cls(t, subset)

    @property
    def is_maximal(self) -> bool:
        return len(self.subset) == 1

    @property
    def index(self) -> int:
        if not self.is_maximal:
            raise UnsupportedCaseError(f"{self} is not a maximal parabolic")
        return next(iter(self.subset))

    def __str__(self) -> str:
        return f"{self.algebra_type}({','.join(str(i) for i in sorted(self.subset))})"


@dataclass(frozen=True)
class StepClassification:
    k: int
    kind: StepKind
    dim_nn: int

    def display(self) -> str:
        match self.kind:
            case StepKind.ABELIAN:
                return "abelian"
            case StepKind.HEISENBERG:
                return "2-step nilpotent (Heisenberg)"
            case StepKind.QUASI_HEISENBERG:
                return "2-step nilpotent (quasi-Heisenberg)"
        return f"{self.k}-step nilpotent"


def _s_grade(r: Root, subset: frozenset[int]) -> int:
    return sum(r[i - 1] for i in subset)


def classify_step(spec: ParabolicSpec) -> StepClassification:
    """k from the S-multiplicities of the highest root; kind refined by dim [n, n]."""
    rs = build_root_system(spec.algebra_type)
    k = _s_grade(rs.highest_root, spec.subset)
    dim_nn = sum(1 for r in rs.positive_roots if _s_grade(r, spec.subset) >= 2)
    if k == 1:
        kind = StepKind.ABELIAN
    elif k == 2:
        kind = StepKind.HEISENBERG if dim_nn == 1 else StepKind.QUASI_HEISENBERG
    else:
        kind = StepKind.K_STEP
    return StepClassification(k, kind, dim_nn)


def nilpotency_bruteforce(spec: ParabolicSpec) -> tuple[int, int]:
    """(step, dim [n, n]) from the lower central series of n, bracket by bracket."""
    rs = build_root_system(spec.algebra_type)
    table = chevalley_table(rs)
    n_roots = [r for r in rs.positive_roots if _s_grade(r, spec.subset) >= 1]
    series = [set(n_roots)]
    while series[-1]:
        nxt = set()
        for a in n_roots:
            for b in series[-1]:
                if table.get((a, b)):
                    nxt.add(tuple(x + y for x, y in zip(a, b)))
        series.append(nxt)
    step = len(series) - 1
    dim_nn = len(series[1]) if len(series) > 1 else 0
    return step, dim_nn


@dataclass(frozen=True)
class ParabolicCase:
    """Quasi-Heisenberg maximal parabolic q = l + g(1) + z(n), with its distinguished roots.

    Simple-root index sets are 1-based; roots are simple-root coordinate tuples.
    """

    spec: ParabolicSpec
    model: LieAlgebraModel
    h_q: AlgebraElement
    delta_g1: tuple[Root, ...]
    delta_zn: tuple[Root, ...]
    delta_l_plus: tuple[Root, ...]
    alpha_gamma: Root
    mu: Root
    gamma: Root
    xi_gamma: Root
    xi_ngamma: Optional[Root]
    lgamma_simples: frozenset[int]
    lngamma_simples: frozenset[int]
    lambda_q: Weight

    @property
    def label(self) -> str:
        return str(self.spec)

    @property
    def root_system(self) -> RootSystem:
        return self.model.root_system

    @property
    def q(self) -> int:
        return self.spec.index

    @property
    def alpha_q(self) -> Root:
        return self.root_system.simple_root(self.q)

    @cached_property
    def alpha_q_norm(self) -> Fraction:
        return self.root_system.norm(self.alpha_q)

    @cached_property
    def levi_simples(self) -> frozenset[int]:
        return frozenset(range(1, self.root_system.rank + 1)) - {self.q}

    @cached_property
    def alpha_gamma_index(self) -> int:
        return self.alpha_gamma.index(1) + 1

    @cached_property
    def delta_l(self) -> tuple[Root, ...]:
        return self.delta_l_plus + tuple(tuple(-c for c in r) for r in self.delta_l_plus)

    @cached_property
    def g1_set(self) -> frozenset:
        return frozenset(self.delta_g1)

    @cached_property
    def zn_set(self) -> frozenset:
        return frozenset(self.delta_zn)

    def grade(self, r: Root) -> int:
        return r[self.q - 1]

    def label_grade(self, label: Label) -> int:
        return 0 if isinstance(label, int) else label[self.q - 1]

    def lambda_q_on_cartan(self, coefficients: dict) -> Fraction:
        """lambda_q(sum_k c_k H_k) = c_q ||alpha_q||^2 / 2 (0-based keys)."""
        return coefficients.get(self.q - 1, 0) * self.alpha_q_norm / 2


def _component_highest_root(rs: RootSystem, nodes: frozenset[int]) -> Root:
    inside = [r for r in rs.positive_roots if all(c == 0 or (k + 1) in nodes for k, c in enumerate(r))]
    return inside[-1]


@lru_cache(maxsize=None)
def build_case(spec: ParabolicSpec) -> ParabolicCase:
    cls = classify_step(spec)
    if not spec.is_maximal:
        raise UnsupportedCaseError(f"{spec} is not a maximal parabolic")
    if cls.kind is not StepKind.QUASI_HEISENBERG:
        raise UnsupportedCaseError(f"{spec} is {cls.display()}, not quasi-Heisenberg")
    t = spec.algebra_type
    q = spec.index
    if t.family is Family.D and q == t.rank - 2:
        raise ExcludedCaseError(f"{spec} excluded: three simple ideals")

    model = build_model(t)
    rs = model.root_system
    gamma = rs.highest_root

    grade = {r: r[q - 1] for r in rs.positive_roots}
    delta_g1 = tuple(r for r in rs.positive_roots if grade[r] == 1)
    delta_zn = tuple(r for r in rs.positive_roots if grade[r] == 2)
    delta_l_plus = tuple(r for r in rs.positive_roots if grade[r] == 0)

    candidates = [j for j in range(1, rs.rank + 1) if rs.inner(rs.simple_root(j), gamma) != 0]
    if len(candidates) != 1 or candidates[0] == q:
        raise ConsistencyError(f"{spec}: expected one Levi simple root non-orthogonal to gamma, got {candidates}")
    alpha_gamma = rs.simple_root(candidates[0])

    graph = dynkin_graph(t)
    graph.remove_node(q)
    components = [frozenset(c) for c in nx.connected_components(graph)]
    if len(components) > 2:
        raise ExcludedCaseError(f"{spec} excluded: three simple ideals")
    lgamma = next(c for c in components if candidates[0] in c)
    rest = [c for c in components if c is not lgamma]
    lngamma = rest[0] if rest else frozenset()

    mu = delta_g1[-1]
    if any(rs.coroot_pairing(mu, j - 1) < 0 for j in range(1, rs.rank + 1) if j != q):
        raise ConsistencyError(f"{spec}: highest g(1) root {format_root(mu)} is not Levi-dominant")

    lambda_q = fundamental_weight(rs, q)
    h_q = model.h_vector([2 * c / rs.norm(rs.simple_root(q)) for c in lambda_q])

    case = ParabolicCase(
        spec=spec,
        model=model,
        h_q=h_q,
        delta_g1=delta_g1,
        delta_zn=delta_zn,
        delta_l_plus=delta_l_plus,
        alpha_gamma=alpha_gamma,
        mu=mu,
        gamma=gamma,
        xi_gamma=_component_highest_root(rs, lgamma),
        xi_ngamma=_component_highest_root(rs, lngamma) if lngamma else None,
        lgamma_simples=lgamma,
        lngamma_simples=lngamma,
        lambda_q=lambda_q,
    )
    logger.info(
        "built case %s: dim g(1) = %d, dim z(n) = %d, l_gamma = %s, l_ngamma = %s",
        spec,
        len(delta_g1),
        len(delta_zn),
        sorted(lgamma),
        sorted(lngamma),
    )
    return case


def case_from_label(label: str) -> ParabolicCase:
    return build_case(ParabolicSpec.parse(label))
