import json
import logging
import os
import subprocess
import sys
from pathlib import Path

import pytest

from matrep.cli import InputError, RunConfig, main, parse_matrix, parse_matroid, summarize
from matrep.decide import decide
from matrep.matroid import uniform

from conftest import DATA

FANO_ROWS = """7 3
# Fano plane
0010110
0100101
1000011
0011001
0101010
1001100
1110000
"""


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# -- parsing ----------------------------------------------------------------


def test_parse_incidence_rows(fano):
    assert parse_matroid(FANO_ROWS) == fano


def test_parse_mixed_forms(fano):
    text = FANO_ROWS.replace("1110000", "c 1 2 3").replace("0010110", "C 3 5 6")
    assert parse_matroid(text) == fano


def test_oversized_circuit_is_dropped(caplog):
    with caplog.at_level(logging.WARNING, logger="matrep"):
        M = parse_matroid("3 2\nc 1 2 3\n")
    assert M == uniform(2, 3)
    assert "exceeds the rank" in caplog.text


@pytest.mark.parametrize(
    "text, line",
    [
        ("7 x\n", 1),
        ("3 2\n110\n1x0\n", 3),
        ("3 2\n\n# comment\n11\n", 4),
        ("3 2\nc 1 4\n", 2),
        ("3 2\nc 1 1\n", 2),
        ("3 2\nc\n", 2),
        ("3 2\n000\n", 2),
    ],
)
def test_malformed_lines_report_line_numbers(text, line):
    with pytest.raises(InputError) as info:
        parse_matroid(text, source="m.txt")
    assert info.value.line == line
    assert str(info.value).startswith(f"m.txt:{line}:")


def test_axiom_violations_need_force(caplog):
    text = "4 3\nc 1 2\nc 1 3\n"
    with pytest.raises(InputError, match="elimination"):
        parse_matroid(text)
    with caplog.at_level(logging.WARNING, logger="matrep"):
        M = parse_matroid(text, force=True)
    assert M.n == 4 and "ignored" in caplog.text


def test_parse_matrix():
    q, A = parse_matrix("2 3 4\n1 0 e\n0 1 e+1\n")
    assert q == 4 and len(A) == 2 and A[0][0] == 1
    with pytest.raises(InputError):
        parse_matrix("2 3 6\n1 0 0\n0 1 0\n")
    with pytest.raises(InputError):
        parse_matrix("2 3 2\n1 0\n0 1 1\n")
    with pytest.raises(InputError):
        parse_matrix("2 3 2\n1 0 1\n")


def test_render_round_trip(fano, nonpappus, bases_contradiction):
    for M in (fano, nonpappus, bases_contradiction, uniform(2, 4)):
        assert parse_matroid(M.render()) == M


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(command="check", characteristics=(4,))
    with pytest.raises(ValueError):
        RunConfig(command="nope")


# -- commands ---------------------------------------------------------------


def test_check_fano_all_fields(capsys):
    code, out, _ = run(capsys, "check", DATA / "fano.txt", "--all-fields")
    assert code == 0
    assert "candidate characteristics: {2}" in out
    assert "char 2: inconclusive" in out
    assert "classification: finite-characteristic" in out


def test_check_fano_json(capsys, tmp_path):
    out_file = tmp_path / "fano.json"
    code, _, _ = run(capsys, "check", DATA / "fano.txt", "--all-fields", "--exact", "--json", "--no-timings", "-o", out_file)
    assert code == 0
    data = json.loads(out_file.read_text())
    assert data["candidate_characteristics"] == [2]
    assert data["characteristics"]["2"]["status"] == "representable_over_closure"
    assert data["characteristics"]["3"]["status"] == "non_representable"


def test_verify_fano(capsys):
    code, out, _ = run(capsys, "verify", DATA / "fano.txt", DATA / "fano_f2.mat", "--field", "2")
    assert code == 0 and out.strip() == "valid representation"


def test_verify_reports_discrepancies(capsys, tmp_path):
    bad = tmp_path / "bad.mat"
    bad.write_text("3 7 2\n1 0 0 1 1 0 1\n0 1 0 1 0 1 1\n0 0 1 0 1 1 0\n")
    code, out, _ = run(capsys, "verify", DATA / "fano.txt", bad)
    assert code == 0 and out.startswith("invalid representation (")
    code, _, err = run(capsys, "verify", DATA / "fano.txt", DATA / "fano_f2.mat", "--field", "3")
    assert code == 1 and "error" in err


def test_check_nonpappus_all_fields(capsys):
    code, out, _ = run(capsys, "check", DATA / "nonpappus.txt", "--char", "2", "--char", "3", "--all-fields")
    assert code == 0
    assert "all fields: NonRepresentableAllFields" in out
    assert "{7,8,9}" in out.replace(", ", ",")


def test_brute_flag(capsys):
    code, out, _ = run(capsys, "check", DATA / "fano.txt", "--brute", "2", "--brute", "3")
    assert code == 0
    assert "GF(2) representation:" in out and "GF(3): no representation" in out


def test_exit_codes(capsys, tmp_path):
    code, _, err = run(capsys, "check", tmp_path / "missing.txt")
    assert code == 1 and "cannot read" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n1x0\n")
    code, _, err = run(capsys, "check", bad)
    assert code == 1 and ":2:" in err
    code, out, _ = run(capsys, "check", DATA / "nonpappus.txt", "--max-basis", "2")
    assert code == 2 and "resource_exceeded" in out
    with pytest.raises(SystemExit):
        main(["check", str(DATA / "fano.txt"), "--char", "4"])


def test_env_limits(tmp_path):
    env = {**os.environ, "MATREP_MAX_BASIS": "2"}
    out = subprocess.run(
        [sys.executable, "-m", "matrep", "check", str(DATA / "nonpappus.txt")],
        env=env, capture_output=True, text=True,
    )
    assert out.returncode == 2


def test_dual_and_simplify(capsys, tmp_path):
    code, out, _ = run(capsys, "dual", DATA / "fano.txt")
    assert code == 0
    D = parse_matroid(out)
    assert D.n == 7 and D.r == 4
    code, out, _ = run(capsys, "dual", DATA / "fano.txt")
    twice = tmp_path / "d.txt"
    twice.write_text(out)
    code, out2, _ = run(capsys, "dual", twice)
    assert parse_matroid(out2) == parse_matroid((DATA / "fano.txt").read_text())
    loopy = tmp_path / "loopy.txt"
    loopy.write_text("4 2\nc 1\nc 2 3\n")
    code, out, _ = run(capsys, "simplify", loopy)
    assert code == 0
    assert out.splitlines()[0] == "# kept 2 4"
    assert parse_matroid(out) == uniform(2, 2)


def test_dump_system_is_stable(capsys):
    code, a, _ = run(capsys, "dump-system", DATA / "fano.txt")
    code2, b, _ = run(capsys, "dump-system", DATA / "fano.txt")
    assert code == code2 == 0 and a == b
    assert "x_2_3" in a and "t" in a
    code, c, _ = run(capsys, "check", DATA / "fano.txt", "--dump-system")
    assert c.startswith(a)


def test_trace(capsys):
    code, _, err = run(capsys, "check", DATA / "gf4_order9.txt", "--all-fields", "--trace")
    assert code == 0
    lines = [l for l in err.splitlines() if l.startswith("pair ")]
    assert lines and all(" divisions=[" in l for l in lines)


def test_batch_summary_matches_individual_verdicts(capsys, tmp_path):
    inputs = tmp_path / "in"
    inputs.mkdir()
    for name in ("fano", "nonpappus", "bases_contradiction"):
        (inputs / f"{name}.txt").write_text((DATA / f"{name}.txt").read_text())
    (inputs / "broken.txt").write_text("3 2\nzzz\n")
    out_dir = tmp_path / "out"
    code, out, _ = run(capsys, "batch", inputs, "--out-dir", out_dir, "--jobs", "2", "--all-fields")
    assert code == 1  # one input error
    summary = json.loads((out_dir / "summary.json").read_text())
    counts = summary["counts"]
    assert sum(counts.values()) == 4
    assert counts["non-representable"] == 2
    assert counts["finite-characteristic"] == 1
    assert counts["input-error"] == 1
    for res in summary["files"]:
        if res["classification"] == "input-error":
            continue
        M = parse_matroid((inputs / (res["file"].rsplit("/", 1)[-1])).read_text())
        assert decide(M, all_fields=True).classification == res["classification"]
        assert json.loads(Path(res["report"]).read_text())["classification"] == res["classification"]
    assert summarize(summary["files"]) == counts
    assert "non-representable" in out and "total" in out


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "matrep", "verify", str(DATA / "fano.txt"), str(DATA / "fano_f2.mat")],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and out.stdout.strip() == "valid representation"
