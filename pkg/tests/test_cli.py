"""Command-line behavior: golden outputs, exit codes, determinism."""

import json

from triads import cli
from triads.scalar import parse_scalar
from triads.suites import SuiteResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_pascal_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "pascal", "--rows", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "1,4,6,4,1"
    assert lines[0] == "1"


def test_table_csv_quotes_symbolic_cells(capsys):
    code, out, _ = run(capsys, "table", "--family", "gauss", "--rows", "2", "--format", "csv")
    assert code == 0
    assert out.strip().splitlines() == ["1", "1,1", '1,"1 + q",1']


def test_table_gauss_at_q_one_is_pascal(capsys):
    code, gauss_out, _ = run(capsys, "table", "--family", "gauss", "--rows", "3", "--q", "1", "--format", "csv")
    assert code == 0
    code, pascal_out, _ = run(capsys, "table", "--family", "pascal", "--rows", "3", "--format", "csv")
    assert code == 0
    assert gauss_out == pascal_out


def test_table_json_round_trips(capsys):
    code, out, _ = run(capsys, "table", "--family", "gauss", "--rows", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["family"] == "gauss"
    assert "q" not in payload and "psi" not in payload
    from triads.families import family_value

    for n, row in enumerate(payload["rows"]):
        for k, text in enumerate(row):
            assert parse_scalar(text) == family_value("gauss", n, k)


def test_table_json_records_q_and_psi(capsys):
    code, out, _ = run(
        capsys, "table", "--family", "psi-stirling2", "--psi", "fibonacci", "--rows", "2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["family"] == "psi-stirling2"
    assert payload["psi"] == "fibonacci"
    code, out, _ = run(capsys, "table", "--family", "gauss", "--rows", "2", "--q", "2/3", "--format", "json")
    assert json.loads(out)["q"] == "2/3"


def test_table_from_spec_file(capsys, tmp_path):
    path = tmp_path / "pascalish.json"
    path.write_text(
        json.dumps({"i": {"rule": "constant"}, "q": {"rule": "constant"}, "d": {"rule": "constant", "value": "0"}})
    )
    code, out, _ = run(capsys, "table", "--spec", str(path), "--rows", "4", "--format", "csv")
    assert code == 0
    assert out.strip().splitlines()[-1] == "1,4,6,4,1"
    payload_code, out, _ = run(capsys, "table", "--spec", str(path), "--rows", "2", "--format", "json")
    assert json.loads(out)["spec"] == "pascalish"


def test_table_usage_errors(capsys):
    code, _, err = run(capsys, "table", "--rows", "3")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "table", "--family", "pascal", "--spec", "pascal", "--rows", "3")
    assert code == 2
    code, _, err = run(capsys, "table", "--family", "pascal", "--rows", "3", "--q", "1/0")
    assert code == 2
    code, _, err = run(capsys, "table", "--spec", "missing-spec", "--rows", "3")
    assert code == 2


def test_konvalina_value(capsys):
    code, out, _ = run(capsys, "konvalina", "--weights", "2,3,5", "--kind", "first", "--k", "2")
    assert code == 0 and out.strip() == "31"
    code, out, _ = run(capsys, "konvalina", "--weights", "1,q,q^2", "--kind", "second", "--k", "2")
    assert code == 0 and out.strip() == "1 + q + 2*q^2 + q^3 + q^4"


def test_konvalina_rules_and_table(capsys):
    code, out, _ = run(capsys, "konvalina", "--weights", "qpowers", "--length", "3", "--kind", "first", "--k", "3")
    assert code == 0 and out.strip() == "q^3"
    code, out, _ = run(capsys, "konvalina", "--weights", "ones", "--length", "4", "--table", "--format", "csv")
    assert code == 0
    assert out.strip().splitlines()[-1] == "1,4,6,4,1"
    code, _, err = run(capsys, "konvalina", "--weights", "naturals", "--kind", "first", "--k", "1")
    assert code == 2 and "--length" in err
    code, _, err = run(capsys, "konvalina", "--weights", "1,,2", "--k", "1")
    assert code == 2
    code, _, err = run(capsys, "konvalina", "--weights", "1,2")
    assert code == 2


def test_verify_spec_passes(capsys):
    code, out, _ = run(capsys, "verify", "--spec", "gauss", "--rows", "8")
    assert code == 0
    assert "PASS connection gauss" in out
    assert "PASS degrees gauss" in out


def test_verify_requires_exactly_one_mode(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2
    code, _, err = run(capsys, "verify", "--suite", "triad", "--spec", "pascal")
    assert code == 2


def test_verify_suite_exit_zero_and_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--suite", "corollary", "--seed", "7")
    code2, out2, _ = run(capsys, "verify", "--suite", "corollary", "--seed", "7")
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.strip().splitlines()[-1].endswith("(seed=7)")


def test_verify_suite_triad_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "triad", "--rows", "10")
    assert code == 0
    assert "FAIL" not in out


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "triads", "table", "--family", "pascal", "--rows", "2", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["1", "1,1", "1,2,1"]


def test_verify_genfun_psi_filter(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "genfun", "--psi", "fibonacci", "--order", "10")
    assert code == 0
    assert "(fibonacci)" in out
    assert "(classical)" not in out


def test_verify_suite_failure_exits_one(capsys, monkeypatch):
    broken = SuiteResult("triad")
    broken.check(False, "synthetic failure")

    monkeypatch.setattr(cli, "run_suites", lambda *a, **k: [broken])
    code, out, _ = run(capsys, "verify", "--suite", "triad")
    assert code == 1
    assert "FAIL triad: synthetic failure" in out


def test_verify_spec_short_sequence_is_usage_error(capsys, tmp_path):
    path = tmp_path / "short.json"
    path.write_text(json.dumps({"i": ["1", "1"], "q": ["0", "1"], "d": ["0", "0"]}))
    code, _, err = run(capsys, "verify", "--spec", str(path), "--rows", "9")
    assert code == 2 and "entry" in err


def test_operator_pretty(capsys):
    code, out, _ = run(
        capsys, "operator", "--array", "binom", "--n", "4", "--k", "2", "--psi", "qfact", "--apply", "x^3"
    )
    assert code == 0
    assert out.strip() == "(1 + q + 2*q^2 + q^3 + q^4)*x^3"


def test_operator_json(capsys):
    code, out, _ = run(
        capsys,
        "operator", "--array", "stirling2", "--n", "4", "--k", "2", "--psi", "classical",
        "--apply", "x^2 + 1", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["array"] == "stirling2"
    assert payload["input"] == ["1", "0", "1"]
    assert payload["image"] == ["7", "0", "7"]


def test_operator_errors(capsys):
    code, _, err = run(capsys, "operator", "--array", "binom", "--n", "2", "--k", "3", "--apply", "x")
    assert code == 2
    code, _, err = run(capsys, "operator", "--array", "binom", "--n", "2", "--k", "1", "--apply", "x +")
    assert code == 2


def test_unknown_subcommand_is_usage_error(capsys):
    assert cli.main(["frobnicate"]) == 2
    capsys.readouterr()
