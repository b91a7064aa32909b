"""CLI surface: output shapes, determinism, exit codes, file output."""
import csv
import io
import json

from semigroup_ld import scan_gluings, from_generators
from semigroup_ld.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_json_roundtrip(capsys):
    code, out, err = run(capsys, ["classify", "6", "9", "20"])
    assert code == 0
    rec = json.loads(out)
    assert rec["verdict"] == "tasty"
    assert (rec["ld"]["num"], rec["ld"]["den"]) == (4, 7)
    assert rec["witness"] == 60 and rec["max_delta"] == 4
    assert rec["certificate"] == {
        "start": 420,
        "period": 60,
        "growth": 7,
        "checked_spans": 2,
    }
    assert "[semigroup-ld] classify took" in err
    assert "[semigroup-ld]" not in out


def test_stdout_is_deterministic(capsys):
    _, out1, _ = run(capsys, ["classify", "20", "28", "42", "73"])
    _, out2, _ = run(capsys, ["classify", "20", "28", "42", "73"])
    assert out1 == out2
    _, out1, _ = run(capsys, ["plot-ld", "6", "9", "20", "--max", "150"])
    _, out2, _ = run(capsys, ["plot-ld", "6", "9", "20", "--max", "150"])
    assert out1 == out2


def test_invariants_json(capsys):
    code, out, _ = run(capsys, ["invariants", "6", "9", "20"])
    assert code == 0
    rec = json.loads(out)
    assert rec["generators"] == [6, 9, 20]
    assert rec["frobenius"] == 43
    assert rec["apery"] == [0, 49, 20, 9, 40, 29]
    assert (rec["period"], rec["growth"], rec["min_delta"]) == (60, 7, 1)


def test_plot_ld_csv_default(capsys):
    code, out, _ = run(capsys, ["plot-ld", "6", "9", "20", "--max", "100"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "num", "den", "ld"]
    row60 = next(r for r in rows if r[0] == "60")
    assert row60[1:3] == ["4", "7"]
    assert row60[3].startswith("0.5714")


def test_scalar_record_as_csv(capsys):
    code, out, _ = run(capsys, ["classify", "6", "9", "20", "--format", "csv"])
    assert code == 0
    header, row = list(csv.reader(io.StringIO(out)))
    rec = dict(zip(header, row))
    assert rec["verdict"] == "tasty" and rec["ld"] == "4/7" and rec["witness"] == "60"


def test_length_set_and_delta_json(capsys):
    code, out, _ = run(capsys, ["length-set", "20", "28", "42", "73", "-n", "202"])
    assert code == 0
    assert json.loads(out)["lengths"] == [4, 6, 7, 9]
    code, out, _ = run(capsys, ["delta", "6", "9", "20", "-n", "60"])
    assert json.loads(out)["delta"] == [1, 4]
    code, out, _ = run(capsys, ["delta", "6", "9", "20"])
    rec = json.loads(out)
    assert rec["delta"] == [1, 2, 3, 4]
    assert {"gap": 4, "first": 60} in rec["attained_at"]


def test_glue_scan_csv_matches_library(capsys):
    code, out, _ = run(
        capsys, ["glue", "scan", "--s1", "2,3", "--s2", "2,3", "--max", "30"]
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["lam", "mu", "verdict"]
    S = from_generators((2, 3))
    lib = scan_gluings(S, S, 30, 30)
    assert [(int(l), int(m), v) for l, m, v in rows[1:]] == list(lib.rows)


def test_glue_classify_json(capsys):
    code, out, _ = run(
        capsys,
        ["glue", "classify", "--s1", "2,3", "--s2", "6,9,20", "--lam", "4", "--mu", "27"],
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["generators"] == [24, 36, 54, 80, 81]
    assert rec["verdict"] == "bland" and rec["max_delta"] == 1


def test_glue_regions_and_proportion(capsys):
    code, out, _ = run(capsys, ["glue", "regions", "--s", "2,5"])
    assert code == 0
    rec = json.loads(out)
    assert rec["floor"] == 13
    assert rec["tasty_line"]["slope"]["num"] == 5
    assert rec["bland_line"]["offset"]["num"] == -15
    code, out, _ = run(capsys, ["glue", "proportion", "--s", "2,3", "--max", "40"])
    assert code == 0
    rec = json.loads(out)
    assert rec["total"] > 0 and rec["ratio"]["den"] > 0


def test_family_commands(capsys):
    code, out, _ = run(capsys, ["family", "supersym", "2", "5", "7"])
    assert code == 0
    rec = json.loads(out)
    assert rec["t"] == [7, 5, 2] and rec["verdict"] == "tasty"
    assert (rec["ld"]["num"], rec["ld"]["den"]) == (2, 5)
    code, out, _ = run(capsys, ["family", "threegen", "6", "9", "20"])
    rec = json.loads(out)
    assert rec["rule"] == "two-betti" and rec["verdict"] == "tasty"
    code, out, _ = run(capsys, ["family", "med4", "5", "6", "7"])
    rec = json.loads(out)
    assert rec["verdict"] == "bland" and rec["provenance"] == "min-rule"
    code, out, _ = run(capsys, ["family", "med-composite", "2", "2"])
    rec = json.loads(out)
    assert rec["bland"] == [4, 5, 6, 7] and rec["tasty"] == [4, 6, 17, 19]


def test_family_med4_grid_csv(capsys):
    code, out, _ = run(capsys, ["family", "med4", "--grid", "--n2", "6", "--max", "20"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n1", "n3", "verdict", "provenance"]
    assert all(r[2] in ("tasty", "bland") for r in rows[1:])
    assert len(rows) > 1


def test_out_file(tmp_path, capsys):
    target = tmp_path / "result.json"
    code, out, _ = run(capsys, ["classify", "6", "9", "20", "--out", str(target)])
    assert code == 0 and out == ""
    rec = json.loads(target.read_text(encoding="utf-8"))
    assert rec["verdict"] == "tasty"


def test_usage_exit_codes(capsys):
    assert run(capsys, ["bogus"])[0] == 64
    assert run(capsys, [])[0] == 64
    assert run(capsys, ["--help"])[0] == 0
    assert run(capsys, ["length-set", "6", "9", "20"])[0] == 64  # missing -n
    assert run(capsys, ["family", "med4", "--grid", "--max", "20"])[0] == 64
    assert run(capsys, ["family", "med4", "5", "6"])[0] == 64
    assert run(capsys, ["glue", "scan", "--s1", "2,3", "--s2", "2,3"])[0] == 64
    assert run(capsys, ["classify", "6,9"])[0] == 64  # comma list, not ints


def test_domain_exit_codes(capsys):
    code, _, err = run(capsys, ["classify", "6", "10"])  # gcd 2
    assert code == 2 and "error" in err
    assert run(capsys, ["ld", "6", "9", "20", "-n", "6"])[0] == 2  # single length
    assert run(capsys, ["length-set", "6", "9", "20", "-n", "43"])[0] == 2
    assert run(capsys, ["family", "med-prime", "6", "9", "20"])[0] == 2
    code, _, err = run(
        capsys,
        ["glue", "classify", "--s1", "2,3", "--s2", "2,3", "--lam", "2", "--mu", "5"],
    )
    assert code == 2 and "atom" in err


def test_jobs_env_matches_flag(capsys, monkeypatch):
    args = ["glue", "scan", "--s1", "2,3", "--s2", "2,5", "--max", "25"]
    _, base, _ = run(capsys, args)
    _, flagged, _ = run(capsys, args + ["--jobs", "2"])
    monkeypatch.setenv("SEMIGROUP_LD_JOBS", "2")
    _, env_out, _ = run(capsys, args)
    assert base == flagged == env_out
