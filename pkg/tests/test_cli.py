import json
import shutil
import subprocess
import sys

import pytest

from adoforge.cli import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    FIXTURE_ENV,
    SCHEMA,
    FixtureError,
    check_fixtures,
    expected_fixtures,
    fixture_dir,
    format_coeff,
    format_poly,
    load_fixture,
    main,
)
from adoforge.exact_arith import root_of_unity
from adoforge.laurent import HalfLaurent


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def fixture_copy(tmp_path):
    dst = tmp_path / "fixtures"
    shutil.copytree(fixture_dir(), dst)
    return dst


# output


def test_fk_json_is_deterministic(capsys):
    args = ("fk", "--s", "2", "--t", "5", "--mmax", "6", "--format", "json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["schema"] == SCHEMA
    assert payload["kind"] == "fk"
    assert payload["knot"] == [2, 5]


def test_ado_all_methods_agree(capsys):
    code, out, _ = run(capsys, "ado", "--p", "4", "--s", "3", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert set(payload["methods"]) == {"closed", "from-fk", "rmatrix"}
    assert [c["outcome"] for c in payload["comparisons"]] == ["equal", "equal"]


def test_ado_text(capsys):
    code, out, _ = run(capsys, "ado", "--p", "3", "--s", "1", "--method", "closed")
    assert code == EXIT_OK
    assert "zeta3" in out


def test_alexander_text(capsys):
    code, out, _ = run(capsys, "alexander", "--s", "2", "--t", "3")
    assert code == EXIT_OK
    assert "x" in out


def test_refined_and_rmatrix(capsys):
    code, out, _ = run(capsys, "refined", "--s", "1", "--what", "alexander", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["schema"] == SCHEMA
    code, _, _ = run(capsys, "refined", "--s", "1", "--what", "superpoly", "--r", "1")
    assert code == EXIT_OK
    code, _, _ = run(capsys, "rmatrix", "--s", "2", "--r", "3", "--compare", "closed")
    assert code == EXIT_OK


def test_format_coeff():
    i = root_of_unity(4)
    z = root_of_unity(3)
    assert format_coeff(i * 2 + 1) == "1+2i"
    assert format_coeff(-i) == "-i"
    assert "zeta3" in format_coeff(z)


def test_format_poly_roundtrip_fixture():
    p = load_fixture(fixture_dir() / "ado4" / "T2_23.json")["poly"]
    assert format_poly(p).startswith("-i x^33 - i x^32")


# exit codes


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["fk", "--s", "2"])
    assert exc.value.code == EXIT_USAGE
    code, _, err = run(capsys, "fk", "--s", "2", "--t", "4", "--mmax", "3")
    assert code == EXIT_USAGE and "error" in err
    code, _, _ = run(capsys, "ado", "--p", "5", "--s", "2", "--method", "closed")
    assert code == EXIT_USAGE


def test_module_entry_point_exit_code():
    proc = subprocess.run([sys.executable, "-m", "adoforge", "fk", "--s", "2"], capture_output=True, text=True)
    assert proc.returncode == EXIT_USAGE
    proc = subprocess.run(
        [sys.executable, "-m", "adoforge", "alexander", "--s", "2", "--t", "3"], capture_output=True, text=True
    )
    assert proc.returncode == EXIT_OK


# fixtures


def test_fixture_schema_and_contents():
    base = fixture_dir()
    for name in expected_fixtures():
        payload = load_fixture(base / name)
        assert payload["schema"] == SCHEMA
        assert payload["transcription"]
    p = load_fixture(base / "ado4" / "T2_23.json")["poly"]
    assert isinstance(p, HalfLaurent)
    i = root_of_unity(4)
    assert p.items()[-2:] == [(64, -i), (66, -i)]


def test_packaged_fixtures_complete():
    assert check_fixtures().ok


def test_missing_directory_lists_everything(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fixtures", "--fixtures", str(tmp_path), "--format", "json")
    assert code == EXIT_MISMATCH
    report = json.loads(out)
    missing = [c["key"] for c in report["cases"] if "missing fixture" in c["outcome"]]
    assert sorted(missing) == sorted(f"fixtures/{n}" for n in expected_fixtures())


def test_corrupt_fixture_is_a_mismatch(fixture_copy, capsys):
    path = fixture_copy / "ado4" / "T2_23.json"
    payload = json.loads(path.read_text())
    payload["poly"]["terms"][0]["c"]["coeffs"][1] = ["1", "1"]  # -i -> +i
    path.write_text(json.dumps(payload))
    code, out, _ = run(capsys, "verify", "--suite", "ado4-golden", "--fixtures", str(fixture_copy),
                       "--format", "json")
    assert code == EXIT_MISMATCH
    bad = [c for c in json.loads(out)["cases"] if c["outcome"].startswith("mismatch")]
    assert [c["key"] for c in bad] == ["c3/ado4/T2_23/algorithm-fixture"]


def test_env_override(fixture_copy, monkeypatch, capsys):
    (fixture_copy / "ado4" / "T2_25.json").write_text("{not json")
    monkeypatch.setenv(FIXTURE_ENV, str(fixture_copy))
    assert fixture_dir() == fixture_copy
    code, out, _ = run(capsys, "verify", "--suite", "ado4-golden", "--quiet")
    assert code == EXIT_MISMATCH
    assert "not valid JSON" in out


@pytest.mark.parametrize(
    "mutate,message",
    [
        (lambda p: p.update(schema="other/9"), "schema"),
        (lambda p: p.pop("knot"), "missing field"),
        (lambda p: p.update(kind="nonsense"), "unknown kind"),
        (lambda p: p.update(poly={"terms": 3}), "bad polynomial"),
    ],
)
def test_load_fixture_validation(fixture_copy, mutate, message):
    path = fixture_copy / "ado4" / "T2_15.json"
    payload = json.loads(path.read_text())
    mutate(payload)
    path.write_text(json.dumps(payload))
    with pytest.raises(FixtureError, match=message):
        load_fixture(path)


def test_report_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--suite", "ado4-golden", "--quiet", "--report", str(out_path))
    assert code == EXIT_OK
    report = json.loads(out_path.read_text())
    assert report["schema"] == SCHEMA
    assert all("seconds" in c for c in report["cases"])
