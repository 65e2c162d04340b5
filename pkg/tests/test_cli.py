import json

import pytest

from fibnest.cli import main
from fibnest.nest import certificate_to_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_depth_zero(tmp_path, capsys):
    out = tmp_path / "seed.json"
    code, stdout, _ = run(capsys, "construct", "--depth", "0", "--out", str(out))
    assert code == 0
    assert "PASS" in stdout
    payload = json.loads(out.read_text())
    assert len(payload["stages"]) == 1


def test_construct_depth_one_matches_library(tmp_path, capsys, cert1):
    out = tmp_path / "cert1.json"
    code, _, _ = run(capsys, "construct", "--depth", "1", "--out", str(out))
    assert code == 0
    assert out.read_text() == certificate_to_json(cert1)


def test_construct_deterministic(tmp_path, capsys):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert run(capsys, "construct", "--depth", "1", "--out", str(first))[0] == 0
    assert run(capsys, "construct", "--depth", "1", "--out", str(second))[0] == 0
    assert first.read_bytes() == second.read_bytes()


def test_construct_without_out_streams_cert(capsys):
    code, stdout, stderr = run(capsys, "construct", "--depth", "1")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["schedule"] == "pow2"
    assert "PASS" in stderr


def test_verify_cert_round_trip(tmp_path, capsys, cert1):
    path = tmp_path / "cert.json"
    path.write_text(certificate_to_json(cert1))
    code, stdout, _ = run(capsys, "verify-cert", "--in", str(path))
    assert code == 0
    assert "PASS" in stdout and "FAIL" not in stdout


def test_verify_cert_rejects_mutation(tmp_path, capsys, cert1):
    payload = json.loads(certificate_to_json(cert1))
    payload["stages"][1]["a"] = "3"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    code, stdout, _ = run(capsys, "verify-cert", "--in", str(path))
    assert code == 1
    assert "FAIL" in stdout


def test_verify_cert_missing_file(tmp_path, capsys):
    code, _, stderr = run(capsys, "verify-cert", "--in", str(tmp_path / "nope.json"))
    assert code == 2
    assert stderr.startswith("error:")


def test_min_scan_pass(capsys):
    code, stdout, _ = run(capsys, "min-scan", "--n", "7", "--a", "1")
    assert code == 0
    assert "scaled=5/13" in stdout
    assert "PASS" in stdout


def test_min_scan_fail(capsys):
    code, stdout, _ = run(capsys, "min-scan", "--n", "6", "--a", "1")
    assert code == 1
    assert "FAIL" in stdout


def test_min_scan_csv(capsys):
    code, stdout, _ = run(capsys, "min-scan", "--n", "7", "--a", "1", "--format", "csv")
    assert code == 0
    header = stdout.splitlines()[0]
    assert header.startswith("name,")
    assert "true" in stdout


def test_min_scan_json(capsys):
    code, stdout, _ = run(capsys, "min-scan", "--n", "7", "--a", "1", "--format", "json")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["lhs"] == "5/13"
    assert payload["pass"] is True
    assert payload["rhs_surd"] == "2/(3+sqrt5)"


def test_limit_table_frozen(capsys):
    code, stdout, _ = run(capsys, "limit-table", "--n-from", "15", "--n-to", "16")
    assert code == 0
    assert stdout == (
        "n,fib_n,scaled_min,decimal,strict_pass\n"
        "15,610,233/610,0.381967213115,true\n"
        "16,987,377/987,0.381965552178,false\n"
        "# smallest scaled minimum = 0.381965552178; "
        "prior bound = 0.005326; improvement factor = 71.72\n"
    )


def test_limit_table_informational_exit(capsys):
    # rows below the threshold do not fail the table command
    code, stdout, _ = run(capsys, "limit-table", "--n-from", "16", "--n-to", "16")
    assert code == 0
    assert "false" in stdout


def test_q1(capsys):
    code, stdout, _ = run(capsys, "q1", "--n", "6", "--x-max", "7")
    assert code == 0
    assert "3/4" in stdout
    code, _, stderr = run(capsys, "q1", "--n", "6", "--x-max", "1")
    assert code == 2
    assert stderr.startswith("error:")


def test_q2(capsys):
    code, stdout, _ = run(capsys, "q2", "--n", "10", "--k", "5")
    assert code == 0
    assert "PASS" in stdout
    code, _, _ = run(capsys, "q2", "--n", "6", "--k", "4")
    assert code == 1


def test_q2_usage_error(capsys):
    code, _, stderr = run(capsys, "q2", "--n", "9", "--k", "9")
    assert code == 2
    assert stderr.startswith("error:")


def test_littlewood(tmp_path, capsys, cert3):
    path = tmp_path / "cert3.json"
    path.write_text(certificate_to_json(cert3))
    code, stdout, _ = run(
        capsys, "littlewood", "--cert", str(path), "--level", "1", "--proxy", "3"
    )
    assert code == 0
    assert "PASS" in stdout
    assert "2/(3+sqrt5)" in stdout


def test_littlewood_zero_error(tmp_path, capsys, cert3):
    path = tmp_path / "cert3.json"
    path.write_text(certificate_to_json(cert3))
    code, stdout, _ = run(
        capsys,
        "littlewood",
        "--cert", str(path),
        "--level", "1",
        "--proxy", "1",
        "--zero-error",
    )
    assert code == 0
    assert "lhs=2/5" in stdout


def test_discrepancy_cap(capsys):
    code, _, _ = run(
        capsys, "discrepancy", "--n", "25", "--count", "100", "--cap", "31/100"
    )
    assert code == 0
    code, _, _ = run(
        capsys, "discrepancy", "--n", "25", "--count", "100", "--cap", "1/100"
    )
    assert code == 1


def test_discrepancy_json(capsys):
    code, stdout, _ = run(
        capsys, "discrepancy", "--n", "25", "--count", "100", "--format", "json"
    )
    assert code == 0
    payload = json.loads(stdout)
    assert payload["lhs"] == "4254/3001"


def test_out_file_matches_stdout(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, _ = run(
        capsys,
        "min-scan", "--n", "7", "--a", "1", "--format", "json", "--out", str(path),
    )
    assert code == 0
    _, stdout, _ = run(capsys, "min-scan", "--n", "7", "--a", "1", "--format", "json")
    assert path.read_text() == stdout


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nope"])
    assert exc.value.code == 2


def test_missing_required_argument(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["min-scan", "--n", "7"])
    assert exc.value.code == 2
