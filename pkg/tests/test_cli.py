import json
import subprocess
import sys

import pytest

from pcnkit import __version__
from pcnkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_uniformity_example(capsys):
    code, out, _ = run(capsys, "uniformity", "-p", "3", "-m", "5", "-d", "61", "-c", "-1")
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == __version__
    assert doc["field"]["modulus"] and doc["field"]["generator"]
    assert doc["report"]["uniformity"] == 1 and doc["report"]["classification"] == "PcN"
    verdicts = {p["prediction"]["theorem_id"]: p["verdict"]["status"] for p in doc["predictions"]}
    assert verdicts["thm-3mod4"] == "confirmed"


def test_uniformity_square_gf81(capsys):
    code, out, _ = run(capsys, "uniformity", "-p", "3", "-m", "4", "-d", "2", "-c", "-1")
    doc = json.loads(out)
    assert code == 0 and doc["report"]["uniformity"] == 2 and doc["report"]["classification"] == "APcN"


def test_uniformity_p17_annotation(capsys):
    code, out, _ = run(capsys, "uniformity", "-p", "17", "-m", "3", "-d", "111", "-c", "-1")
    doc = json.loads(out)
    assert code == 0
    assert doc["report"]["uniformity"] == 4
    assert any("273" in a for a in doc["annotations"])


def test_refuted_prediction_still_exits_zero(capsys):
    code, out, _ = run(capsys, "uniformity", "-p", "3", "-m", "3", "-d", "2", "-c", "-1")
    doc = json.loads(out)
    assert code == 0
    assert any(p["verdict"]["status"] == "refuted" for p in doc["predictions"])


@pytest.mark.parametrize("argv,code", [
    (["uniformity", "-p", "4", "-m", "1", "-d", "3", "-c", "1"], 2),
    (["uniformity", "-p", "3", "-m", "2", "-d", "0", "-c", "1"], 2),
    (["uniformity", "-p", "3", "-m", "2", "-d", "3", "-c", "9"], 2),
    (["uniformity", "-p", "3", "-m", "2", "-d", "3", "-c", "zz"], 2),
    (["uniformity", "-m", "2", "-d", "3", "-c", "1"], 2),
    (["scan", "-p", "3", "-m", "2", "--conjecture"], 2),
    (["solve", "-p", "2", "-m", "3", "-k", "1"], 2),
    (["uniformity", "-p", "2", "-m", "30", "-d", "3", "-c", "1"], 3),
    (["scan", "-p", "3", "-m", "4", "--cap", "27"], 3),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nope"])
    assert exc.value.code == 2


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "examples")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert any(c["status"] == "note" and "111" in c["name"] for c in doc["checks"])
    assert run(capsys, "verify", "--suite", "bluher", "-p", "3", "-m", "2", "-k", "1")[0] == 0
    code, out, _ = run(capsys, "verify", "systems", "-p", "3", "-m", "3", "-k", "1", "--format", "table")
    assert code == 0 and "FAIL" not in out


def test_verify_fails_nonzero_on_assertion(capsys, monkeypatch):
    from pcnkit import cli
    from pcnkit.suites import Check
    monkeypatch.setattr(cli, "run_suite", lambda name, **kw: [Check("x", "fail"), Check("y", "note")])
    assert run(capsys, "verify", "gold")[0] == 1
    monkeypatch.setattr(cli, "run_suite", lambda name, **kw: [Check("x", "pass"), Check("y", "note")])
    assert run(capsys, "verify", "gold")[0] == 0


def test_scan_conjecture(capsys):
    code, out, _ = run(capsys, "scan", "-p", "2", "-m", "6", "--conjecture")
    doc = json.loads(out)
    assert code == 0 and doc["holds"]
    assert doc["scan_not_predicted"] == [] and doc["predicted_not_scan"] == []
    assert 5 in doc["agreed_exponents"]


def test_scan_writes_csv(tmp_path, capsys):
    path = tmp_path / "gf9.csv"
    assert run(capsys, "scan", "-p", "3", "-m", "2", "--format", "csv", "--output", str(path))[0] == 0
    lines = path.read_text().splitlines()
    assert lines[0].startswith("# version,")
    assert lines[1] == "d,c"
    assert "1,0" in lines


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "-p", "17", "-m", "3", "-k", "1", "--family", "T2")
    assert code == 0
    assert json.loads(out)["solutions"][0]["solutions"] == [273]


def test_field_and_spectrum(capsys):
    code, out, _ = run(capsys, "field", "-p", "3", "-m", "2")
    doc = json.loads(out)
    assert code == 0 and doc["field"]["modulus"] == [2, 1, 1] and doc["field"]["generator"] == 3
    code, out, _ = run(capsys, "spectrum", "-p", "5", "-m", "2", "-d", "6", "-c", "g^1")
    assert code == 0 and json.loads(out)["spectrum"]["omega"] == [10, 5, 10]


@pytest.mark.parametrize("fmt", ["table", "csv"])
def test_other_formats_render(capsys, fmt):
    for argv in (["uniformity", "-p", "3", "-m", "4", "-d", "2", "-c", "-1"], ["scan", "-p", "2", "-m", "4"],
                 ["field", "-p", "5", "-m", "1"], ["spectrum", "-p", "3", "-m", "2", "-d", "4", "-c", "2"]):
        code, out, _ = run(capsys, *argv, "--format", fmt)
        assert code == 0 and out


DETERMINISM_CMDS = [
    ["uniformity", "-p", "7", "-m", "3", "-d", "43", "-c", "-1"],
    ["spectrum", "-p", "5", "-m", "3", "-d", "26", "-c", "g^7"],
    ["scan", "-p", "3", "-m", "3"],
    ["scan", "-p", "2", "-m", "5", "--conjecture"],
    ["verify", "spectrum"],
]


@pytest.mark.parametrize("argv", DETERMINISM_CMDS)
def test_json_byte_identical_across_runs_and_workers(argv):
    outs = set()
    for workers in ("1", "1", "3", "8"):
        res = subprocess.run([sys.executable, "-m", "pcnkit", *argv, "--workers", workers],
                             capture_output=True, check=True)
        outs.add(res.stdout)
    assert len(outs) == 1
