import json

import pytest

from cis.cli import EXIT_EXCLUDED, EXIT_OK, EXIT_USAGE, main


def test_classify_text(capsys):
    assert main(["classify", "--type", "A", "--rank", "5", "--subset", "2,4"]) == EXIT_OK
    assert capsys.readouterr().out == "A5(2,4): 2-step nilpotent (quasi-Heisenberg) (dim [n, n] = 4)\n"


def test_classify_json(capsys):
    assert main(["classify", "--type", "G", "--rank", "2", "--subset", "1", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data == {"label": "G2(1)", "k": 3, "kind": "k-step", "dim_nn": 3, "display": "3-step nilpotent"}


@pytest.mark.parametrize(
    "argv, code",
    [
        (["case", "D9(7)"], EXIT_EXCLUDED),
        (["case", "X9(1)"], EXIT_USAGE),
        (["case", "B4(1)"], EXIT_USAGE),
        (["case", "--type", "B", "--rank", "5"], EXIT_USAGE),
        (["classify", "--type", "B", "--rank", "5", "--subset", "two"], EXIT_USAGE),
        (["case", "B5(3)", "--table"], EXIT_USAGE),
    ],
)
def test_error_exit_codes(argv, code, capsys):
    assert main(argv) == code
    assert capsys.readouterr().err.startswith("error: ")


def test_missing_scope_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == EXIT_USAGE


def test_case_json_to_file(tmp_path):
    out = tmp_path / "b5_3.json"
    assert main(["case", "--type", "B", "--rank", "5", "--subset", "3", "--format", "json", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["label"] == "B5(3)"
    assert data["spec_version"] == "1.0"
    assert [c["s_value"] for c in data["special_constituents"]] == ["3/2", "1"]


def test_case_table_csv(capsys):
    assert main(["case", "B5(3)", "--format", "csv", "--table"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("alpha,beta,a,b\n")


def test_verify_cases(capsys):
    assert main(["verify", "--scope", "tables", "--cases", "B5(3);F4(4)"]) == EXIT_OK
    last = capsys.readouterr().out.splitlines()[-1]
    passed, total = last.split()[0].split("/")
    assert passed == total
