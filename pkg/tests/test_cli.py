import json
import subprocess
import sys

import pytest

from contfrob.cli import main
from contfrob.intervals import union_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_set(tmp_path, pairs, name="a.json"):
    p = tmp_path / name
    p.write_text(json.dumps({"intervals": pairs}))
    return str(p)


def test_gap(capsys, tmp_path):
    code, out, _ = run(capsys, "gap", "--set", write_set(tmp_path, [["2/3", "1"]]))
    assert code == 0
    assert json.loads(out)["gap"] == "2"


def test_construct_round_trip(capsys, tmp_path):
    target = tmp_path / "ex3.json"
    code, out, _ = run(capsys, "construct", "--family", "ex3", "--alpha", "5/12", "--out", str(target))
    assert code == 0
    rep = json.loads(out)
    assert rep["predicted_gap"] == "5/4"
    code, out, _ = run(capsys, "gap", "--set", str(target))
    assert json.loads(out)["gap"] == "5/4"
    assert union_from_json(rep) == union_from_json(json.loads(target.read_text()))


def test_sumset_variants(capsys, tmp_path):
    a = write_set(tmp_path, [["1/2", "1"]])
    b = write_set(tmp_path, [["0", "1/4"]], "b.json")
    assert json.loads(run(capsys, "sumset", "--set", a)[1])["intervals"] == [["1", "2"]]
    assert json.loads(run(capsys, "sumset", "--set", a, "--other", b)[1])["intervals"] == [["1/2", "5/4"]]
    assert json.loads(run(capsys, "sumset", "--set", a, "--h", "3")[1])["intervals"] == [["3/2", "3"]]
    tor = json.loads(run(capsys, "sumset", "--set", b, "--torus")[1])
    assert tor["intervals"] == [["0", "1/2"]] and tor["measure"] == "1/2"


def test_discrete(capsys):
    assert json.loads(run(capsys, "discrete", "frobenius", "--set", "3,5")[1])["frobenius"] == 7
    assert json.loads(run(capsys, "discrete", "hfold", "--set", "0,1,3", "--h", "2")[1])["sumset"] == [0, 1, 2, 3, 4, 6]
    code, out, _ = run(capsys, "discrete", "check", "--theorem", "cd", "--exhaustive", "--primes", "3,5")
    assert code == 0 and json.loads(out)["failed"] == 0
    code, out, _ = run(capsys, "discrete", "check", "--theorem", "freiman", "--trials", "20")
    assert code == 0


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "boxing", "--trials", "20", "--workers", "1")
    assert code == 0 and json.loads(out)["passed"]


def test_search(capsys):
    code, out, err = run(capsys, "search", "--alpha", "5/12", "--family", "scaled-chain",
                         "--budget", "2", "--pin-k", "4", "--pin-x", "5/6", "--workers", "1")
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["ratio"] == "15/14" and "evaluated" in err


@pytest.mark.parametrize("pairs", [[["1/2", "1/4"]], [["a", "1"]], [["1/2", "3/2"]]])
def test_bad_set_file_exits_2(capsys, tmp_path, pairs):
    code, _, err = run(capsys, "gap", "--set", write_set(tmp_path, pairs))
    assert code == 2 and "error" in err


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, _ = run(capsys, "gap", "--set", str(tmp_path / "none.json"))
    assert code == 2


def test_bad_alpha_exits_2(capsys):
    assert run(capsys, "construct", "--family", "ex2", "--alpha", "1/3")[0] == 2
    assert run(capsys, "discrete", "frobenius", "--set", "2,4")[0] == 2


def test_usage_error_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["gap"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "contfrob", "discrete", "frobenius", "--set", "2,3"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["frobenius"] == 1


def test_probe_log_exits_0(capsys):
    code, out, _ = run(capsys, "discrete", "probe", "--k", "8", "--p-max", "23", "--trials", "2")
    assert code == 0 and "8" in json.loads(out)["k"]


def test_gap_of_constructed_example2(capsys, tmp_path):
    target = tmp_path / "ex2.json"
    assert run(capsys, "construct", "--family", "ex2", "--alpha", "3/4", "--out", str(target))[0] == 0
    code, out, _ = run(capsys, "gap", "--set", str(target))
    assert code == 0 and json.loads(out)["gap"] == "1/2"


def test_verify_main_bound_seed_7(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "main-bound", "--trials", "1000", "--seed", "7", "--workers", "1")
    assert code == 0 and json.loads(out)["suites"]["main-bound"]["failed"] == 0
