import json
import subprocess
import sys

import pytest

from heckemac import E, generic_context
from heckemac.cli import main, read_E_records

from conftest import datum


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_E_zero(capsys):
    code, out, _ = run(capsys, "E", "--type", "A", "--rank", "1", "--lattice", "P", "--lambda", "0")
    assert code == 0
    rec = json.loads(out)["records"]
    assert rec == [{"lambda": [0], "terms": [{"weight": [0], "coeff": [{"q2exp": {}, "num": 1, "den": 1}]}]}]


def test_E_box_monic_and_round_trip(capsys, tmp_path):
    path = tmp_path / "e.json"
    code, _, _ = run(capsys, "E", "--type", "A", "--rank", "1", "--box", "2", "--out", str(path))
    assert code == 0
    recs = read_E_records(json.loads(path.read_text()))
    assert sorted(recs) == [(-2,), (-1,), (0,), (1,), (2,)]
    ctx = generic_context(*datum("A", 1, "P"))
    for lam, f in recs.items():
        assert f == E(ctx, lam)


def test_deterministic_across_jobs(capsys, tmp_path):
    a, b, c = (tmp_path / n for n in ("a", "b", "c"))
    args = ["E", "--type", "B", "--rank", "2", "--box", "2"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert main(args + ["--out", str(c), "--jobs", "3"]) == 0
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()


def test_satake_residual_zero(capsys):
    code, out, _ = run(capsys, "satake", "--type", "BC", "--rank", "1", "--lattice", "Q",
                       "--d", "1,2", "--d2", "1,1", "--box", "4")
    assert code == 0
    recs = json.loads(out)["records"]
    assert recs and all(r["residual_terms"] == 0 for r in recs)
    assert all(isinstance(t["t_num_halfexp"], int) for r in recs for t in r["terms"])


def test_satake_minuscule_row_single_term(capsys):
    code, out, _ = run(capsys, "satake", "--type", "A", "--rank", "2", "--lambda", "1,0", "--lambda", "0,1")
    assert code == 0
    assert all(len(r["terms"]) == 1 for r in json.loads(out)["records"])


def test_coeff_identity(capsys):
    code, out, _ = run(capsys, "coeff", "--type", "A", "--rank", "1", "--tau", "4",
                       "--char", "0.5", "--lambda", "0")
    assert code == 0
    (rec,) = json.loads(out)["records"]
    assert rec["re"] == pytest.approx(1 / 5) and rec["im"] == 0


def test_coeff_exact(capsys):
    code, out, _ = run(capsys, "coeff", "--type", "A", "--rank", "1", "--tau", "4",
                       "--char", "1/2:1", "--lambda", "0")
    assert code == 0
    assert json.loads(out)["records"][0]["exact"] == "1/5"


def test_csv(capsys):
    code, out, _ = run(capsys, "E", "--type", "A", "--rank", "1", "--box", "1", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "lambda,weight,coefficient"
    assert "-1,1,-1*t1^(-1) + 1" in lines


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"type": "A", "rank": 2, "lattice": "Q", "box": 1}))
    code, out, _ = run(capsys, "E", "--config", str(cfg))
    assert code == 0
    assert [r["lambda"] for r in json.loads(out)["records"]] == [[-1, -1], [0, 0], [1, 1]]


@pytest.mark.parametrize("argv", [
    ["E", "--type", "A", "--rank", "2", "--lattice", "Q", "--lambda", "1,0"],
    ["E", "--type", "A", "--rank", "9"],
    ["E", "--rank", "1"],
    ["coeff", "--type", "A", "--rank", "1", "--lambda", "0", "--char", "1.0"],
    ["coeff", "--type", "A", "--rank", "1", "--tau", "3", "--lambda", "0", "--char", "0"],
    ["coeff", "--type", "A", "--rank", "1", "--tau", "3", "--lambda", "0"],
    ["satake", "--type", "A", "--rank", "1", "--d", "3,1", "--lambda", "0"],
    ["E", "--type", "BC", "--rank", "1", "--lattice", "P", "--lambda", "1"],
])
def test_config_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2, err
    assert err.startswith("error:")


def test_unknown_key_rejected(capsys, tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"type": "A", "rank": 1, "colour": "red"}))
    code, _, err = run(capsys, "E", "--config", str(cfg))
    assert code == 2 and "colour" in err


def test_config_and_flags_exclusive(capsys, tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"type": "A", "rank": 1}))
    code, _, err = run(capsys, "E", "--config", str(cfg), "--box", "2")
    assert code == 2 and "--box" in err


def test_verify_a2(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A", "--rank", "2")
    report = json.loads(out)
    assert code == 0 and report["ok"]
    assert all(v["ok"] for v in report["checks"].values())


def test_verify_bc1_parity_and_orbits(capsys):
    code, out, _ = run(capsys, "verify", "--type", "BC", "--rank", "1", "--lattice", "Q", "--d", "1,2", "--d2", "1,1")
    checks = json.loads(out)["checks"]
    assert code == 0
    assert checks["parity"]["ok"] and checks["orbits"]["ok"]
    assert "4 orbits" in checks["orbits"]["detail"]


def test_verify_detects_corrupted_T0(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A", "--rank", "2", "--corrupt-t0")
    assert code == 3
    assert not json.loads(out)["checks"]["hecke_relations"]["ok"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "heckemac", "E", "--type", "A", "--rank", "1", "--lambda", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["records"][0]["lambda"] == [1]
