import csv
import io
import json

import pytest

from cis.chevalley.cores import build_model
from cis.parabolic.cores import case_from_label
from cis.report import CaseReport, build_case_report, render_csv, render_json, render_table_csv, render_text
from cis.rootsys.cores import AlgebraType, format_root
from cis.utils.types import SCALE_CONVENTION, SCHEMA_VERSION


@pytest.fixture(scope="module")
def b5_3(case_of):
    return build_case_report(case_of("B5(3)"))


def test_report_content(b5_3: CaseReport):
    assert b5_3.label == "B5(3)"
    assert b5_3.spec_version == SCHEMA_VERSION
    assert b5_3.classification["kind"] == "quasi-heisenberg"
    assert b5_3.omega1_value == "0"
    assert [c.s_value for c in b5_3.special_constituents] == ["3/2", "1"]
    assert [c.dimension for c in b5_3.special_constituents] == [6, 30]
    assert b5_3.special_constituents[0].nu == {"simple": "(2,2,2,2,2)", "eps": "2ε1"}
    assert b5_3.distinguished["dim g(1)"] == 15
    assert b5_3.all_properties_hold
    assert not b5_3.notes


def test_report_records_scale_and_omega1_constants(b5_3: CaseReport, case_of):
    case = case_of("B5(3)")
    assert b5_3.scale_convention == SCALE_CONVENTION
    assert set(b5_3.omega1_constants) == {format_root(a) for a in case.delta_g1}
    assert len(b5_3.omega1_constants) == 15
    assert all(c.startswith("-") for c in b5_3.omega1_constants.values())


def test_json_round_trip(b5_3: CaseReport):
    data = json.loads(render_json(b5_3))
    assert data["spec_version"] == SCHEMA_VERSION
    assert data["scale_convention"] == SCALE_CONVENTION
    assert data["omega1_constants"] == b5_3.omega1_constants
    assert CaseReport.from_dict(data) == b5_3


def test_text_rendering(b5_3: CaseReport):
    text = render_text(b5_3)
    assert text.startswith("B5(3): 2-step nilpotent (quasi-Heisenberg)\n")
    assert "Omega_1: s = 0" in text
    assert "  c_alpha: " in text
    assert f"scale: {SCALE_CONVENTION}\n" in text
    assert "\033[" not in text
    assert "\033[" in render_text(b5_3, color=True)


def test_csv_rendering(b5_3: CaseReport):
    lines = render_csv([b5_3]).splitlines()
    assert lines[0] == "label,source,nu,epsilon,type,dimension,s_value,s_expected,omega1_value,omega1_constants,scale_convention"
    assert len(lines) == 3
    assert lines[1].startswith("B5(3),lgamma_tensor,")
    row = next(csv.DictReader(io.StringIO(render_csv([b5_3]))))
    assert row["scale_convention"] == SCALE_CONVENTION
    assert len(row["omega1_constants"].split(";")) == 15


def test_constituent_without_closed_form():
    report = build_case_report(case_from_label("C4(2)"))
    assert report.special_constituents[0].s_value == "?"
    assert report.special_constituents[0].bracket is not None
    assert report.special_constituents[1].s_value == "-1"
    assert report.notes


def test_certificate_in_report():
    report = build_case_report(case_from_label("B5(3)"), certificate=True)
    assert report.special_constituents[0].certificate == {"g(1)": True, "z(n)": True, "l": True}


def test_table_csv():
    lines = render_table_csv(build_model(AlgebraType.parse("B2"))).splitlines()
    assert lines[0] == "alpha,beta,a,b"
    assert "(0,1),(1,1),1,0" in lines
