import pytest

import cis.verify
from cis.parabolic.cores import ParabolicSpec, case_from_label
from cis.tensor.cores import special_constituents
from cis.utils.types import ConstituentType
from cis.verify import case_properties, certificate_results, run_scope


def _specs(*labels: str):
    return [ParabolicSpec.parse(label) for label in labels]


def test_tables_scope():
    results = run_scope("tables", _specs("B5(3)", "C4(2)", "F4(4)"))
    failed = [r for r in results if not r.passed]
    assert not failed, failed
    suites = {r.suite for r in results}
    assert {"highest-roots", "classification", "distinguished-roots", "decomposition", "constituents", "special-values"} <= suites


@pytest.mark.slow
def test_lemmas_scope():
    results = run_scope("lemmas", _specs("B5(3)", "D6(3)"))
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    assert {"normalization", "root-strings", "lemmas", "certificate"} <= {r.suite for r in results}


@pytest.mark.slow
def test_all_scope_default_cases():
    results = run_scope("all")
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_unbuildable_case_is_a_failure():
    (result,) = [r for r in run_scope("tables", _specs("D9(7)")) if r.suite == "cases"]
    assert not result.passed
    assert "ExcludedCaseError" in result.detail


def test_unknown_scope():
    with pytest.raises(ValueError):
        run_scope("everything")


@pytest.mark.parametrize("label", ["B5(3)", "B6(6)", "C4(2)", "D6(3)", "F4(4)"])
def test_case_properties(label: str):
    report = case_properties(case_from_label(label), equivariance_samples=2)
    assert all(report.values()), [name for name, ok in report.items() if not ok]


def test_default_cases_cover_every_sampled_rank(monkeypatch):
    calls = []

    def fake_table_cases(*args, **kwargs):
        calls.append(kwargs)
        return []

    monkeypatch.setattr(cis.verify, "table_cases", fake_table_cases)
    run_scope("tables")
    assert calls == [{"largest_only": False}]


def test_certificate_results_b5_3():
    case = case_from_label("B5(3)")
    closed = [sc for sc in special_constituents(case) if sc.kind.has_closed_form]
    results = certificate_results(case)
    assert len(results) == 3 * len(closed)
    assert {r.name.split(": ")[-1] for r in results} == {"g(1)", "z(n)", "l"}
    assert all(r.suite == "certificate" and r.passed for r in results)


@pytest.mark.slow
@pytest.mark.parametrize("label", ["E7(2)", "E7(6)", "E8(1)"])
def test_certificate_results_exceptional(label: str):
    results = certificate_results(case_from_label(label))
    assert results
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_type_2_constituent_is_certified():
    case = case_from_label("F4(4)")
    assert any(sc.kind is ConstituentType.TYPE_2 for sc in special_constituents(case))
    assert all(r.passed for r in certificate_results(case))
