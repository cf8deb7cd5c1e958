from __future__ import annotations

import io
import json
import os
import subprocess
import sys

import pytest

from evacshuffle import cli
from evacshuffle.punctured import GenomicTableau, PuncturedTableau
from evacshuffle.sweep import Failure, SweepResult

FIG_SMALL = ["--alpha", "2,2,1", "--beta", "3,1,1", "--gamma", "3,2", "--rect", "4x4"]
FIG_LARGE = ["--alpha", "6,5,3,1", "--beta", "7,4,3,2", "--gamma", "5,5,4,2", "--rect", "6x8"]
WORKED_INPUT = ["......111", "...X1122", "...1223", "...334", "..44", "235"]
WORKED_OUTPUT = ["......111", "...11122", "...2223", "...33X", "..44", "345"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["format"] == 1
    return doc


# -- enumerate ------------------------------------------------------------


def test_enumerate_box_first_counts(capsys):
    code, out, _ = run(capsys, "enumerate", *FIG_SMALL, "--set", "box-first")
    assert code == 0
    assert out.splitlines()[0] == "count\t2"


def test_enumerate_json_round_trips(capsys):
    doc = run_json(capsys, "enumerate", *FIG_SMALL, "--set", "box-last")
    assert doc["count"] == 2
    for obj in doc["tableaux"]:
        pt = PuncturedTableau.from_json(obj)
        assert pt.is_box_last and pt.to_json() == obj


def test_enumerate_genomic(capsys):
    doc = run_json(capsys, "enumerate", *FIG_SMALL, "--set", "genomic")
    assert doc["count"] == 0
    doc = run_json(capsys, "enumerate", "--alpha", "3,2,1", "--beta", "4,2,1", "--gamma", "3,2,1", "--rect", "4x5",
                   "--set", "genomic")
    assert doc["count"] == 13 and doc["by_family"] == {"1": 6, "2": 4, "3": 3}
    for obj in doc["tableaux"]:
        assert GenomicTableau.from_json(obj).to_json() == obj


def test_missing_flag_exits_with_usage_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["enumerate", "--alpha", "2,2,1"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--alpha", "2,x", "--beta", "1", "--gamma", "1", "--rect", "2x2"],
        ["enumerate", "--alpha", "1", "--beta", "1", "--gamma", "", "--rect", "2x2"],
        ["enumerate", "--alpha", "1", "--beta", "1", "--gamma", "1", "--rect", "2by2"],
    ],
)
def test_invalid_triples_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


# -- trace ----------------------------------------------------------------


def test_trace_worked_example(capsys, tmp_path):
    src = tmp_path / "t.txt"
    src.write_text("\n".join(WORKED_INPUT) + "\n")
    svg = tmp_path / "path.svg"
    code, out, _ = run(capsys, "trace", "--input", str(src), "--svg", str(svg))
    assert code == 0
    lines = out.splitlines()
    assert "transition_step\t3" in lines
    out_rows = lines[lines.index("output:") + 1: lines.index("output:") + 7]
    assert [r.strip() for r in out_rows] == WORKED_OUTPUT
    assert svg.read_text().lstrip().startswith("<?xml")


def test_trace_reverse_recovers_input(capsys, tmp_path):
    src = tmp_path / "t.txt"
    src.write_text("\n".join(WORKED_OUTPUT))
    doc = run_json(capsys, "trace", "--input", str(src), "--direction", "reverse")
    assert PuncturedTableau.from_json(doc["output"]).rows() == WORKED_INPUT
    assert doc["transition_step"] == 3


def test_trace_json_input_and_stdin(capsys, tmp_path, monkeypatch):
    pt = PuncturedTableau.parse(WORKED_INPUT)
    src = tmp_path / "t.json"
    src.write_text(json.dumps(pt.to_json()))
    doc = run_json(capsys, "trace", "--input", str(src))
    assert [m["kind"] for m in doc["moves"]] == ["Vert", "Pieri", "Horiz", "CPieri", "Horiz", "CPieri"]
    assert len(doc["cells"]) == 7
    monkeypatch.setattr(sys, "stdin", io.StringIO("\n".join(WORKED_INPUT)))
    doc2 = run_json(capsys, "trace", "--input", "-")
    assert doc2["output"] == doc["output"]


def test_trace_empty_content(capsys, tmp_path):
    src = tmp_path / "t.txt"
    src.write_text("X\n")
    doc = run_json(capsys, "trace", "--input", str(src))
    assert doc["moves"] == []


def test_trace_by_index(capsys):
    doc = run_json(capsys, "trace", *FIG_SMALL, "--index", "1")
    assert doc["output"]["stage"] == 4
    code, _, err = run(capsys, "trace", *FIG_SMALL, "--index", "2")
    assert code == 2 and "out of range" in err
    code, _, _ = run(capsys, "trace", *FIG_SMALL)
    assert code == 2


def test_trace_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "trace", "--input", str(tmp_path / "nope.txt"))
    assert code == 2


# -- orbits, invariants, family -------------------------------------------------


def test_orbits_table_for_large_triple(capsys, tmp_path):
    fig = tmp_path / "orbits.svg"
    code, out, _ = run(capsys, "orbits", *FIG_LARGE, "--figure", str(fig))
    assert code == 0
    assert out.splitlines() == ["orbit_size\tK1\tK2", "38\t52\t51", "23\t31\t28", "10\t9\t13"]
    assert fig.exists()


def test_orbits_json(capsys):
    doc = run_json(capsys, "orbits", *FIG_SMALL)
    assert doc["fixed_points"] == [0, 1]
    assert [o["size"] for o in doc["orbits"]] == [1, 1]


def test_invariants_json(capsys):
    doc = run_json(capsys, "invariants", "--alpha", "3,2,1", "--beta", "4,2,1", "--gamma", "3,2,1", "--rect", "4x5")
    assert doc["genus"] == 2 and doc["lr_count"] == 12 and doc["k_count"] == 13


def test_family_staircase(capsys):
    doc = run_json(capsys, "family", "--staircase", "3")
    assert doc["invariants"]["genus"] == 2
    assert doc["orbit_sizes"] == [12]
    code, out, _ = run(capsys, "family", "--staircase", "3")
    assert code == 0 and "genus\t2" in out.splitlines()


def test_family_components(capsys):
    doc = run_json(capsys, "family", "--components", "3")
    assert doc["fixed_points"] == 2
    assert "genus" not in doc["invariants"]


def test_family_rejects_small_parameters(capsys):
    assert run(capsys, "family", "--staircase", "2")[0] == 2
    assert run(capsys, "family", "--components", "1")[0] == 2


# -- verify and bench ---------------------------------------------------------


def test_verify_small_bound_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4")
    assert code == 0
    assert all("\tPASS\t" in line for line in out.splitlines()[2:])


def test_verify_selected_checks_json(capsys):
    doc = run_json(capsys, "verify", "--max-n", "5", "--checks", "oracle-equivalence,conjecture")
    assert doc["ok"] is True and doc["failures"] == []
    assert set(doc["checked"]) == {"oracle-equivalence", "conjecture"}


def test_verify_unknown_check_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--checks", "nonsense")
    assert code == 2 and "unknown checks" in err


def test_verify_reports_first_counterexample(capsys, monkeypatch):
    bad = SweepResult(triples=1, tableaux=1)
    bad.failures.append(Failure("conjecture", ((1,), (1,), (), "2x2"), "orbit too small", ("X1",)))
    monkeypatch.setattr(cli, "run_sweep", lambda spec: bad)
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--checks", "conjecture")
    assert code == 1
    assert "conjecture\tFAIL" in out
    payload = json.loads(out[out.index("{"):])
    assert payload["rows"] == ["X1"] and payload["check"] == "conjecture"


def test_bench_is_deterministic_in_its_counters(capsys, tmp_path):
    fig = tmp_path / "bench.svg"
    first = run_json(capsys, "bench", "--t-min", "3", "--t-max", "4", "--figure", str(fig))
    second = run_json(capsys, "bench", "--t-min", "3", "--t-max", "4")
    strip = lambda rows: [{k: v for k, v in r.items() if "seconds" not in k and k != "time_ratio"} for r in rows]
    assert strip(first["rows"]) == strip(second["rows"])
    assert fig.exists()
    assert run(capsys, "bench", "--t-min", "2")[0] == 2


def test_seed_variable_is_ignored_and_exit_code_propagates():
    env = dict(os.environ, TABLEAU_SEED="12345")
    cmd = [sys.executable, "-m", "evacshuffle", "enumerate", *FIG_SMALL, "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, text=True, env=env)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == b.returncode == 0 and a.stdout == b.stdout
    bad = subprocess.run([sys.executable, "-m", "evacshuffle", "enumerate"], capture_output=True, text=True)
    assert bad.returncode == 2
