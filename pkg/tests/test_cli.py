import json
import subprocess
import sys

import pytest

from partalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compose_identity_with_swap(capsys):
    code, out, _ = run(capsys, "compose", "1 1' | 2 2'", "1 2'| 2 1'")
    assert code == 0
    assert out.splitlines() == ["1 2' | 2 1'", "removed_blocks: 0"]


def test_compose_p1_squared(capsys):
    code, out, _ = run(capsys, "compose", "1 | 1'", "1 | 1'", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"diagram": [[1], [-1]], "removed_blocks": 1}


@pytest.mark.parametrize("argv", [
    ("compose", "1 1 | 2'", "1 | 1'"),
    ("compose", "1 1'", "1 1' | 2 2'"),
    ("compose", "garbage", "1 | 1'"),
    ("expand", "L", "1/3"),
    ("expand", "L", "3", "--rank", "2"),
    ("verify", "nope"),
    ("verify",),
    ("verify", "tensor:nope"),
    ("verify", "r_2", "--rank", "9"),
    ("verify", "tensor:commutant", "--n", "2"),
    ("verify", "tensor:commutant", "--n", "5", "--r", "6"),
    ("frobnicate",),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_expand_L2(capsys):
    code, out, _ = run(capsys, "expand", "L", "2", "--rank", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["rank"] == 3
    signs = sorted(t["coeff"][0] for t in data["terms"])
    assert signs == [-1, -1, 1, 1, 1]


def test_expand_sigma1_and_json_file(capsys, tmp_path):
    path = tmp_path / "s.json"
    code, out, _ = run(capsys, "expand", "sigma", "1", "--rank", "2", "--json", str(path))
    assert code == 0
    assert "1 terms" in out
    assert json.loads(path.read_text()) == {"rank": 2, "terms": [{"diagram": [[1, -1], [2, -2]], "coeff": [1]}]}


def test_expand_central(capsys):
    code, out, _ = run(capsys, "expand", "central", "3/2", "--rank", "2", "--format", "json")
    assert code == 0
    from partalg.jucys_murphy import expand
    want = expand("L", "1/2", 2) + expand("L", 1, 2) + expand("L", "3/2", 2)
    assert json.loads(out) == want.to_json()


def test_verify_all_rank_3(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--rank", "3")
    assert code == 0
    assert out.rstrip().endswith("52/52 suites passed")


def test_verify_json_report(capsys, tmp_path):
    path = tmp_path / "out.json"
    code, _, _ = run(capsys, "verify", "thm_ab", "--rank", "4", "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    (rep,) = data["reports"]
    assert rep["suite"] == "thm_ab" and rep["rank"] == 4
    assert rep["checks"] and all(c["pass"] for c in rep["checks"])


def test_verify_tensor(capsys):
    code, out, _ = run(capsys, "verify", "tensor:hr_equality", "--n", "4", "--r", "2")
    assert code == 0
    assert "1/1 suites passed" in out


def test_deterministic_output(capsys):
    a = run(capsys, "verify", "r_2", "c_e", "tensor:commutant", "--rank", "3", "--format", "json")
    b = run(capsys, "verify", "r_2", "c_e", "tensor:commutant", "--rank", "3", "--format", "json")
    assert a == b and a[0] == 0


def test_jobs_give_same_reports(capsys):
    serial = run(capsys, "verify", "r_2", "c_e", "prel_a", "--rank", "3", "--format", "json")
    parallel = run(capsys, "verify", "r_2", "c_e", "prel_a", "--rank", "3", "--format", "json",
                   "--jobs", "2")
    assert serial == parallel


def test_exit_1_on_failure(capsys, monkeypatch):
    from partalg import cli
    from partalg.report import Check, VerificationReport

    def broken(spec):
        return VerificationReport(suite=spec[1], rank=spec[2], checks=[Check("x", (1,), False, 3)])
    monkeypatch.setattr(cli, "_job", broken)
    code, out, _ = run(capsys, "verify", "r_2")
    assert code == 1
    assert "FAIL" in out


def test_dims(capsys):
    code, out, _ = run(capsys, "dims")
    assert code == 0
    assert out.split() == ["1", "2", "2", "15", "3", "203", "4", "4140"]


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("PA_MAX_RANK", "2")
    code, out, _ = run(capsys, "dims")
    assert code == 0 and out.split() == ["1", "2", "2", "15"]
    assert run(capsys, "verify", "r_2", "--rank", "3")[0] == 2
    monkeypatch.setenv("PA_MAX_RANK", "5")
    assert run(capsys, "verify", "r_2", "--rank", "5")[0] == 0


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "partalg", "compose", "1 | 1'", "1 | 1'"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert "removed_blocks: 1" in res.stdout
