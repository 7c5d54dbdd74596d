import json
import subprocess
import sys

import pytest

from yangian.algebra import DEFAULT_TERM_CAP, Yangian, set_term_cap
from yangian.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rtt", "--n", "2", "--cutoff", "3")
    assert code == 0
    assert out.splitlines()[0].startswith("suite rtt: n=2 cutoff=3")
    assert out.splitlines()[-1].startswith("PASS ")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "center", "--n", "2", "--cutoff", "3",
                       "--report", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["suite"] == "center" and doc["failed"] == 0
    assert doc["elapsed_ms"] == 0
    assert list(doc) == ["suite", "params", "cases", "passed", "failed", "elapsed_ms", "seed"]


def test_verify_only_filter(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "parabolic", "--n", "3", "--cutoff", "2",
                       "--only", "pr9", "--verbose")
    assert code == 0
    listed = [line for line in out.splitlines() if line.startswith("  ok")]
    assert listed and all(" pr9:" in line for line in listed)


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--n", "2", "--cutoff", "3")
    assert code == 0
    assert out.splitlines()[-1].startswith("all suites: PASS ")


def test_usage_errors(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2 and "unknown suite" in err
    code, _, err = run(capsys, "verify", "--suite", "parabolic", "--n", "3", "--nu", "2,2")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_term_cap_failure_exit_code(capsys):
    try:
        code, out, _ = run(capsys, "verify", "--suite", "rtt", "--n", "2", "--cutoff", "4",
                           "--term-cap", "2")
    finally:
        set_term_cap(DEFAULT_TERM_CAP)
        Yangian(2).clear_cache()
    assert code == 1
    assert "error:" in out


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert out.split()[0] == "rtt"
    code, out, _ = run(capsys, "list", "--suite", "hopf", "--n", "2", "--cutoff", "2")
    assert "coassoc:T[1,2;2]" in out


def test_show(capsys):
    code, out, _ = run(capsys, "show", "--expr", "T[2,1;1]*T[1,2;1]")
    assert code == 0
    assert out.strip() == "T[1,2;1]*T[2,1;1] + T[2,2;1] - T[1,1;1]"
    code, out, _ = run(capsys, "show", "--gen", "E[1,2;1,1;1]", "--n", "3", "--nu", "2,1")
    assert out.strip() == "T[1,3;1]"
    code, out, _ = run(capsys, "show", "--gen", "D[2;1,1;2]", "--n", "2")
    assert out.strip() == "-T[1,2;1]*T[2,1;1] + T[2,2;2] - T[2,2;1] + T[1,1;1]"
    code, _, err = run(capsys, "show", "--n", "2")
    assert code == 2
    code, _, err = run(capsys, "show", "--gen", "Q[1]", "--n", "2")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "yangian", "verify", "--suite", "qdet", "--n", "2",
                           "--cutoff", "2", "--report", "json"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["failed"] == 0
