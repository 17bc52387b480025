import json

import pytest

from nilorb import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_roots_command(capsys):
    code, out, _ = run(capsys, "roots", "G2")
    assert code == 0
    assert "rank 2" in out
    assert "positive roots: 6" in out


def test_algebra_command(capsys):
    code, out, _ = run(capsys, "algebra", "F4", "--orbit-dim-min")
    assert code == 0
    assert "dim 52" in out
    assert "projective 15" in out


def test_orbit_list(capsys):
    code, out, _ = run(capsys, "orbit", "list", "--type", "C2")
    assert code == 0
    assert out.count("dim") == 4


def test_orbit_info(capsys):
    code, out, _ = run(capsys, "orbit", "info", "--type", "C3",
                       "--partition", "2,2,2")
    assert code == 0
    assert "dimension 12" in out
    assert "pi1 order 2" in out


def test_orbit_info_requires_partition(capsys):
    code, _, err = run(capsys, "orbit", "info", "--type", "C3")
    assert code == 2
    assert "partition" in err


def test_orbit_invalid_partition_exit_2(capsys):
    code, _, err = run(capsys, "orbit", "info", "--type", "C3",
                       "--partition", "3,2,1")
    assert code == 2
    assert "error" in err


def test_check_pairing_pass_and_fail(capsys):
    code, out, _ = run(capsys, "check", "pairing", "--type", "G2",
                       "--diagram", "0,1")
    assert code == 0 and "holds" in out
    code, out, _ = run(capsys, "check", "pairing", "--type", "G2",
                       "--diagram", "0,2")
    assert code == 1 and "fails" in out and "witness" in out


def test_check_exclusion(capsys):
    code, out, _ = run(capsys, "check", "exclusion", "--type", "F4",
                       "--diagram", "1,1,0,0")
    assert code == 0 and "excluded" in out
    code, _, err = run(capsys, "check", "exclusion", "--type", "B3",
                       "--diagram", "0,1,0")
    assert code == 2


def test_check_table(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "table")
    assert code == 0 and "54/54" in out
    bad = tmp_path / "bad.tsv"
    bad.write_text("g\tg_prime\torbit\tdegree\nA2\tG2\t3\t7\n")
    code, out, _ = run(capsys, "check", "table", "--file", str(bad))
    assert code == 1
    assert "FAIL" in out


def test_check_key_lemma(capsys):
    code, out, _ = run(capsys, "check", "key-lemma", "--type", "G2",
                       "--diagram", "0,1")
    assert code == 0
    assert "kernel dim: 0" in out


def test_model_demo(capsys):
    code, out, _ = run(capsys, "model", "sp", "--n", "2", "--demo")
    assert code == 0
    assert "jordan type (2, 1, 1)" in out
    assert "kostant-kirillov rank 4" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify-paper", "--only", "nonsense")
    assert code == 2
    assert "unknown suite" in err


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "g2-classification")
    assert code == 0
    assert out.count("[PASS]") == 4


def test_verify_table_alias(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "table62")
    assert code == 0
    assert "shared-orbit-table" in out


def test_verify_json_stable(capsys):
    code, out1, _ = run(capsys, "verify-paper", "--only", "closure-order",
                        "--json", "--seed", "5")
    assert code == 0
    code, out2, _ = run(capsys, "verify-paper", "--only", "closure-order",
                        "--json", "--seed", "5")
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["ok"] is True
    assert all(r["status"] == "pass" for r in payload["reports"])


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2
