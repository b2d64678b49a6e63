"""Per-case reports and their text / JSON / CSV renderings.

A CaseReport holds only strings, numbers, booleans, lists and dicts, so the
JSON form round-trips through ``CaseReport.from_dict``.
"""

import csv
import io
import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Optional

from .chevalley.cores import LieAlgebraModel, table_rows
from .omega.cores import (
    conformal_certificate,
    explore_constituent,
    generate_system,
    omega1_special_value,
    omega1_system,
    solve_special_value,
)
from .parabolic.cores import ParabolicCase, StepClassification, classify_step
from .rootsys.cores import format_root
from .rootsys.realizations import format_eps, has_eps_view, simple_to_eps
from .tensor.cores import lgamma_decomposition, special_constituents
from .tensor.weyl import weyl_dimension
from .utils.types import SCALE_CONVENTION, SCHEMA_VERSION, Root
from .verify import case_properties

__all__ = [
    "ConstituentReport",
    "CaseReport",
    "classification_dict",
    "build_case_report",
    "render_text",
    "render_json",
    "render_csv",
    "render_table_csv",
]

logger = logging.getLogger(__name__)

_GREEN = "\033[32m"
_RED = "\033[31m"
_BOLD = "\033[1m"
_RESET = "\033[0m"


def _root_view(case: ParabolicCase, r: Optional[Root]) -> Optional[dict[str, str]]:
    if r is None:
        return None
    view = {"simple": format_root(r)}
    if has_eps_view(case.root_system.algebra_type):
        view["eps"] = format_eps(simple_to_eps(case.root_system.algebra_type, r))
    return view


@dataclass
class ConstituentReport:
    source: str
    nu: dict[str, str]
    epsilon: dict[str, str]
    type: str
    dimension: int
    s_value: str
    s_expected: Optional[str] = None
    prefactor: Optional[str] = None
    coefficient: Optional[str] = None
    delta_nu_g1: Optional[int] = None
    operator: Optional[str] = None
    bracket: Optional[str] = None
    certificate: Optional[dict[str, bool]] = None


@dataclass
class CaseReport:
    label: str
    classification: dict[str, Any]
    distinguished: dict[str, Any]
    decomposition: list[dict[str, Any]]
    special_constituents: list[ConstituentReport]
    omega1_value: str
    properties: dict[str, bool]
    spec_version: str = SCHEMA_VERSION
    scale_convention: str = SCALE_CONVENTION
    omega1_constants: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def all_properties_hold(self) -> bool:
        return all(self.properties.values())

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CaseReport":
        data = dict(data)
        data["special_constituents"] = [ConstituentReport(**c) for c in data["special_constituents"]]
        return cls(**data)


def classification_dict(cls: StepClassification) -> dict[str, Any]:
    return {"k": cls.k, "kind": cls.kind.value, "dim_nn": cls.dim_nn, "display": cls.display()}


def _constituent_report(case: ParabolicCase, sc, *, certificate: bool) -> ConstituentReport:
    base = dict(
        source=sc.source.value,
        nu=_root_view(case, sc.nu),
        epsilon=_root_view(case, sc.epsilon),
        type=sc.kind.value,
        dimension=weyl_dimension(case.root_system, case.levi_simples, sc.nu),
    )
    if not sc.kind.has_closed_form:
        explored = explore_constituent(case, sc)
        return ConstituentReport(**base, s_value="?", operator=str(explored.operator), bracket=str(explored.bracket))
    result = solve_special_value(case, sc)
    cert = None
    if certificate:
        cert = conformal_certificate(case, sc, result.s_value, generate_system(case, sc, result.operator))
    return ConstituentReport(
        **base,
        s_value=str(result.s_value),
        s_expected=str(result.s_expected),
        prefactor=str(result.prefactor),
        coefficient=str(result.coefficient),
        delta_nu_g1=result.delta_nu_g1,
        operator=str(result.operator),
        certificate=cert,
    )


def build_case_report(case: ParabolicCase, *, certificate: bool = False) -> CaseReport:
    rs = case.root_system
    distinguished = {
        "alpha_q": case.q,
        "alpha_gamma": case.alpha_gamma_index,
        "mu": _root_view(case, case.mu),
        "gamma": _root_view(case, case.gamma),
        "xi_gamma": _root_view(case, case.xi_gamma),
        "xi_ngamma": _root_view(case, case.xi_ngamma),
        "Pi(l_gamma)": sorted(case.lgamma_simples),
        "Pi(l_ngamma)": sorted(case.lngamma_simples),
        "dim g(1)": len(case.delta_g1),
        "dim z(n)": len(case.delta_zn),
    }
    decomposition = [
        {
            "highest_weight": _root_view(case, tuple(int(c) for c in hw)),
            "multiplicity": mult,
            "dimension": weyl_dimension(rs, case.levi_simples, hw),
        }
        for hw, mult in lgamma_decomposition(case).constituents
    ]
    constituents = [_constituent_report(case, sc, certificate=certificate) for sc in special_constituents(case)]
    omega1 = omega1_system(case)
    report = CaseReport(
        label=case.label,
        classification=classification_dict(classify_step(case.spec)),
        distinguished=distinguished,
        decomposition=decomposition,
        special_constituents=constituents,
        omega1_value=str(omega1_special_value(case, omega1)),
        properties=case_properties(case),
        omega1_constants={format_root(op.alpha): str(op.constant) for op in omega1},
    )
    if any(c.s_value == "?" for c in constituents):
        report.notes.append("'?' marks a constituent without closed form; its bracket is reported raw")
    logger.info("%s: report assembled, %d properties", case.label, len(report.properties))
    return report


def _show(view: Optional[dict[str, str]]) -> str:
    if view is None:
        return "-"
    if "eps" in view:
        return f"{view['eps']} {view['simple']}"
    return view["simple"]


def render_text(report: CaseReport, *, color: bool = False) -> str:
    def paint(text: str, code: str) -> str:
        return f"{code}{text}{_RESET}" if color else text

    a = report.distinguished
    lines = [
        paint(f"{report.label}: {report.classification['display']}", _BOLD),
        f"  alpha_gamma = alpha{a['alpha_gamma']}",
        f"  mu = {_show(a['mu'])}",
        f"  gamma = {_show(a['gamma'])}",
        f"  xi_gamma = {_show(a['xi_gamma'])}",
        f"  xi_ngamma = {_show(a['xi_ngamma'])}",
        f"  Pi(l_gamma) = {a['Pi(l_gamma)']}, Pi(l_ngamma) = {a['Pi(l_ngamma)']}",
        f"  dim g(1) = {a['dim g(1)']}, dim z(n) = {a['dim z(n)']}",
        "l_gamma (x) z(n):",
    ]
    for d in report.decomposition:
        lines.append(f"  V({_show(d['highest_weight'])})  dim {d['dimension']}")
    lines.append(f"Omega_1: s = {report.omega1_value}")
    lines.append("  c_alpha: " + ", ".join(f"{root} -> {value}" for root, value in report.omega1_constants.items()))
    for c in report.special_constituents:
        lines.append(f"Omega_2 [{c.source}] nu = {_show(c.nu)}, eps = {_show(c.epsilon)}, type {c.type}, dim {c.dimension}")
        lines.append(f"  s = {c.s_value}")
        if c.coefficient is not None:
            lines.append(f"  [pi_s(X_mu), Omega_2(Y*_l)]_e = ({c.coefficient})·R(X_-eps)")
        if c.bracket is not None:
            lines.append(f"  raw bracket: {c.bracket}")
        if c.certificate is not None:
            for part, ok in c.certificate.items():
                lines.append(f"  certificate {part}: " + (paint("ok", _GREEN) if ok else paint("FAILED", _RED)))
    failed = [name for name, ok in report.properties.items() if not ok]
    summary = f"properties: {len(report.properties) - len(failed)}/{len(report.properties)} hold"
    lines.append(paint(summary, _GREEN if not failed else _RED))
    lines.extend(f"  FAILED {name}" for name in failed)
    lines.append(f"scale: {report.scale_convention}")
    lines.extend(f"note: {n}" for n in report.notes)
    return "\n".join(lines) + "\n"


def render_json(report: CaseReport) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"


_CSV_FIELDS = (
    "label",
    "source",
    "nu",
    "epsilon",
    "type",
    "dimension",
    "s_value",
    "s_expected",
    "omega1_value",
    "omega1_constants",
    "scale_convention",
)


def render_csv(reports: list[CaseReport]) -> str:
    """One row per (case, special constituent)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_FIELDS)
    for r in reports:
        constants = ";".join(f"{root}={value}" for root, value in r.omega1_constants.items())
        for c in r.special_constituents:
            writer.writerow(
                (
                    r.label,
                    c.source,
                    c.nu["simple"],
                    c.epsilon["simple"],
                    c.type,
                    c.dimension,
                    c.s_value,
                    c.s_expected or "",
                    r.omega1_value,
                    constants,
                    r.scale_convention,
                )
            )
    return buf.getvalue()


def render_table_csv(model: LieAlgebraModel) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("alpha", "beta", "a", "b"))
    writer.writerows(table_rows(model))
    return buf.getvalue()
