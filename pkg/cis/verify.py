"""Acceptance suites: reproduction of the published tables and the structural lemmas.

Each check produces a CheckResult; a suite passes when every result passes.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .chevalley.cores import build_model, check_normalization
from .omega.cores import (
    conformal_certificate,
    generate_system,
    lowest_vector,
    omega1_special_value,
    omega_invariance_defect,
    solve_special_value,
    straightness_defect,
    tau2_highest_vector,
    tau_equivariance_defect,
    tau_tilde,
    vgamma_lowest_vectors,
)
from .parabolic.cores import ParabolicCase, ParabolicSpec, build_case, classify_step, nilpotency_bruteforce
from .parabolic.lemmas import structural_checks, verify_weight_lemmas
from .reference import (
    distinguished_roots,
    expected_constituents,
    expected_decomposition,
    expected_highest_root,
    quasi_heisenberg_indices,
    table_cases,
)
from .rootsys.cores import AlgebraType, build_root_system, format_root, root_string_report
from .tensor.cores import decomposition_dimensions, lgamma_decomposition, special_constituents
from .tensor.lemmas import constituent_lemmas
from .utils.errors import CisError
from .utils.types import StepKind

__all__ = ["SCOPES", "CheckResult", "case_properties", "certificate_results", "run_scope"]

logger = logging.getLogger(__name__)

SCOPES = ("tables", "lemmas", "all")

_HIGHEST_ROOT_TYPES = ("A5", "B7", "C6", "D8", "E6", "E7", "E8", "F4", "G2")
_CLASSIFICATION_TYPES = ("B5", "C5", "D6", "F4")
_NORMALIZATION_EXHAUSTIVE = ("B5", "C5", "D6", "F4", "E6")
_NORMALIZATION_SAMPLED = ("E7", "E8")
_ROOT_STRING_TYPES = ("B5", "C5", "D6", "E6", "E7", "E8", "F4", "G2")
_JACOBI_SAMPLES = 10_000


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _guard(suite: str, name: str, check: Callable[[], Iterable[CheckResult]]) -> list[CheckResult]:
    """Turn an exception raised by a check into a failed result."""
    try:
        return list(check())
    except CisError as exc:
        logger.warning("%s / %s raised %s", suite, name, exc)
        return [CheckResult(suite, name, False, f"{type(exc).__name__}: {exc}")]


def _from_report(suite: str, prefix: str, report: dict[str, bool]) -> list[CheckResult]:
    return [CheckResult(suite, f"{prefix}: {name}", ok) for name, ok in report.items()]


def _highest_roots() -> Iterable[CheckResult]:
    for label in _HIGHEST_ROOT_TYPES:
        t = AlgebraType.parse(label)
        got = build_root_system(t).highest_root
        want = expected_highest_root(t)
        yield CheckResult("highest-roots", label, got == want, f"{format_root(got)} vs {format_root(want)}")


def _classification() -> Iterable[CheckResult]:
    specs = [
        ParabolicSpec(AlgebraType.parse(label), frozenset({i}))
        for label in _CLASSIFICATION_TYPES
        for i in range(1, AlgebraType.parse(label).rank + 1)
    ]
    specs += [ParabolicSpec(AlgebraType.parse("A5"), frozenset(pair)) for pair in itertools.combinations(range(1, 6), 2)]
    for spec in specs:
        cls = classify_step(spec)
        got = nilpotency_bruteforce(spec)
        yield CheckResult("classification", str(spec), got == (cls.k, cls.dim_nn), f"{cls.display()}, brute force {got}")
    for label in _HIGHEST_ROOT_TYPES[1:]:
        t = AlgebraType.parse(label)
        found = frozenset(
            i for i in range(1, t.rank + 1) if classify_step(ParabolicSpec(t, frozenset({i}))).kind is StepKind.QUASI_HEISENBERG
        )
        want = quasi_heisenberg_indices(t)
        yield CheckResult("classification", f"{label} quasi-Heisenberg list", found == want, f"{sorted(found)} vs {sorted(want)}")


def _distinguished(case: ParabolicCase) -> Iterable[CheckResult]:
    row = distinguished_roots(case.spec)
    got = {
        "alpha_gamma": case.alpha_gamma_index,
        "mu": case.mu,
        "gamma": case.gamma,
        "xi_gamma": case.xi_gamma,
        "xi_ngamma": case.xi_ngamma,
        "Pi(l_gamma)": case.lgamma_simples,
        "Pi(l_ngamma)": case.lngamma_simples,
    }
    want = {
        "alpha_gamma": row.alpha_gamma_index,
        "mu": row.mu,
        "gamma": row.gamma,
        "xi_gamma": row.xi_gamma,
        "xi_ngamma": row.xi_ngamma,
        "Pi(l_gamma)": row.lgamma,
        "Pi(l_ngamma)": row.lngamma,
    }
    for key in got:
        yield CheckResult("distinguished-roots", f"{case.label} {key}", got[key] == want[key], f"{got[key]} vs {want[key]}")


def _decomposition(case: ParabolicCase) -> Iterable[CheckResult]:
    dec = lgamma_decomposition(case)
    want = expected_decomposition(case.spec)
    got = dec.roots()
    yield CheckResult("decomposition", f"{case.label} constituents", got == want, f"{sorted(got)} vs {sorted(want)}")
    yield CheckResult("decomposition", f"{case.label} multiplicity free", dec.multiplicity_free)
    total, expected = decomposition_dimensions(case, dec)
    yield CheckResult("decomposition", f"{case.label} dimensions", total == expected, f"{total} vs {expected}")


def _constituents(case: ParabolicCase) -> Iterable[CheckResult]:
    found = special_constituents(case)
    want = expected_constituents(case.spec)
    yield CheckResult("constituents", f"{case.label} count", len(found) == len(want), f"{len(found)} vs {len(want)}")
    for sc, row in zip(found, want):
        name = f"{case.label} {sc.source.value}"
        same = (sc.nu, sc.epsilon, sc.kind) == (row.nu, row.epsilon, row.kind)
        yield CheckResult("constituents", name, same, f"nu={format_root(sc.nu)} eps={format_root(sc.epsilon)} type {sc.kind.value}")
        if row.s_value is None:
            continue
        result = solve_special_value(case, sc)
        yield CheckResult(
            "special-values",
            name,
            result.s_value == row.s_value and result.matches_closed_form,
            f"s={result.s_value}, expected {row.s_value}",
        )


def _omega1(case: ParabolicCase) -> Iterable[CheckResult]:
    s = omega1_special_value(case)
    yield CheckResult("special-values", f"{case.label} Omega_1", s == 0, f"s={s}")


def _normalization() -> Iterable[CheckResult]:
    for label in _NORMALIZATION_EXHAUSTIVE + _NORMALIZATION_SAMPLED:
        samples = _JACOBI_SAMPLES if label in _NORMALIZATION_SAMPLED else None
        model = build_model(AlgebraType.parse(label))
        try:
            check_normalization(model, jacobi_samples=samples)
        except CisError as exc:
            yield CheckResult("normalization", label, False, str(exc))
        else:
            yield CheckResult("normalization", label, True)


def _root_strings() -> Iterable[CheckResult]:
    for label in _ROOT_STRING_TYPES:
        report = root_string_report(build_root_system(AlgebraType.parse(label)))
        yield from _from_report("root-strings", label, report)


def case_properties(case: ParabolicCase, *, equivariance_samples: int = 5) -> dict[str, bool]:
    """Weight lemmas, structural facts and constituent identities of one case."""
    report: dict[str, bool] = {}
    report.update(verify_weight_lemmas(case))
    report.update(structural_checks(case))
    report["omega is l-invariant"] = omega_invariance_defect(case) == 0
    for k in (1, 2):
        report[f"tau_{k} is l-equivariant"] = tau_equivariance_defect(case, k, samples=equivariance_samples) == 0
    vg = vgamma_lowest_vectors(case)
    report["tau~_2 vanishes on the V(gamma)* lowest vectors"] = bool(vg) and not any(tau_tilde(case, 2, y) for y in vg)
    dec = lgamma_decomposition(case)
    total, expected = decomposition_dimensions(case, dec)
    report["l_gamma (x) z(n) dimensions add up"] = total == expected
    report["l_gamma (x) z(n) is multiplicity free"] = dec.multiplicity_free

    model = case.model
    lowering = [model.x(tuple(-c for c in case.root_system.simple_root(j))) for j in sorted(case.levi_simples)]
    for sc in special_constituents(case):
        prefix = f"nu={format_root(sc.nu)}"
        for name, ok in constituent_lemmas(case, sc).items():
            report[f"{prefix}: {name}"] = ok
        if not sc.kind.has_closed_form:
            continue
        for name, ok in tau2_highest_vector(case, sc).items():
            report[f"{prefix}: {name}"] = ok
        y = lowest_vector(case, sc)
        report[f"{prefix}: Y*_l is killed by the lowering Levi root vectors"] = all(not y.act(z) for z in lowering)
        report[f"{prefix}: Omega_2(Y*_l) is straight"] = straightness_defect(case, solve_special_value(case, sc).operator) == 0
    return report


def _lemmas(case: ParabolicCase) -> Iterable[CheckResult]:
    return _from_report("lemmas", case.label, case_properties(case))


def certificate_results(case: ParabolicCase) -> list[CheckResult]:
    """Conformal invariance at the special value for every closed-form constituent, one result per part of q."""
    results = []
    for sc in special_constituents(case):
        if not sc.kind.has_closed_form:
            continue
        solved = solve_special_value(case, sc)
        system = generate_system(case, sc, solved.operator)
        report = conformal_certificate(case, sc, solved.s_value, system)
        prefix = f"{case.label} nu={format_root(sc.nu)} s={solved.s_value}"
        results += _from_report("certificate", prefix, report)
    return results


def run_scope(scope: str, specs: Optional[list[ParabolicSpec]] = None) -> list[CheckResult]:
    if scope not in SCOPES:
        raise ValueError(f"Unknown scope {scope!r}; expected one of {', '.join(SCOPES)}")
    specs = table_cases(largest_only=False) if specs is None else specs
    results: list[CheckResult] = []
    if scope in ("tables", "all"):
        results += _guard("highest-roots", "reference", _highest_roots)
        results += _guard("classification", "oracle", _classification)
    if scope in ("lemmas", "all"):
        results += _guard("normalization", "chevalley relations", _normalization)
        results += _guard("root-strings", "string identities", _root_strings)
    for spec in specs:
        label = str(spec)
        try:
            case = build_case(spec)
        except CisError as exc:
            results.append(CheckResult("cases", label, False, f"{type(exc).__name__}: {exc}"))
            continue
        if scope in ("tables", "all"):
            results += _guard("distinguished-roots", label, lambda: _distinguished(case))
            results += _guard("decomposition", label, lambda: _decomposition(case))
            results += _guard("constituents", label, lambda: _constituents(case))
            results += _guard("special-values", label, lambda: _omega1(case))
        if scope in ("lemmas", "all"):
            results += _guard("lemmas", label, lambda: _lemmas(case))
            results += _guard("certificate", label, lambda: certificate_results(case))
        logger.info("%s: %d checks so far", label, len(results))
    return results
