import csv
import json

import pytest

from snchar.cli import main
from snchar.algebra import MultiPoly
from snchar.report import (write_positivity_report, write_verify_report)
from snchar.stanley import positivity_report
from snchar.verify import run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_kerov_text_output(capsys):
    code, out, _ = run(capsys, "kerov", "--k", "4", "--basis", "R")
    assert code == 0
    assert out.strip() == "R5 + 5 R3"


def test_kerov_c_basis_output(capsys):
    code, out, _ = run(capsys, "kerov", "--k", "6", "--basis", "C")
    assert code == 0
    assert out.strip() == "R7 + 35/4 C5 + 42 C3"


def test_kerov_json_roundtrip(capsys):
    code, out, _ = run(capsys, "kerov", "--k", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    poly = MultiPoly.from_json(payload["poly"])
    assert poly.to_json() == payload["poly"]
    assert payload["k"] == 5 and payload["basis"] == "R"


def test_stanley_negated_output(capsys):
    code, out, _ = run(capsys, "stanley", "--k", "2", "--m", "2", "--negate-q")
    assert code == 0
    assert out.strip() == "a^2 b + a b^2 + 2 a p q + p^2 q + p q^2"


def test_stanley_json_mentions_aliases(capsys):
    code, out, _ = run(capsys, "stanley", "--k", "1", "--m", "2", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["aliases"] == {"p1": "a", "p2": "p", "q1": "b", "q2": "q"}
    assert MultiPoly.from_json(payload["poly"]).to_json() == payload["poly"]


def test_character_value(capsys):
    code, out, _ = run(capsys, "character", "--shape", "2,2", "--class", "2,1,1")
    assert code == 0
    assert out.strip() == "0"


def test_character_normalized(capsys):
    code, out, _ = run(capsys, "character", "--shape", "3,3,3",
                       "--normalized", "--k", "2")
    assert code == 0
    assert out.strip() == "0"


def test_character_usage_error(capsys):
    code, _, err = run(capsys, "character", "--shape", "2,2")
    assert code == 2
    assert "need --class" in err


def test_character_bad_partition(capsys):
    with pytest.raises(SystemExit):
        main(["character", "--shape", "1,3", "--class", "2,1,1"])


def test_shiftschur_cli(capsys):
    code, out, _ = run(capsys, "shiftschur", "--lambda", "2,2", "--x", "2,2")
    assert code == 0
    assert out.strip() == "12"


def test_shiftschur_rational_points(capsys):
    code, out, _ = run(capsys, "shiftschur", "--lambda", "1", "--x", "1/2,8")
    assert code == 0
    assert out.strip() == "17/2"


def test_psharp_cli(capsys):
    code, out, _ = run(capsys, "psharp", "--mu", "2,1", "--lambda", "3,1")
    assert code == 0
    assert out.strip() == "8"


def test_psharp_size_error(capsys):
    code, _, err = run(capsys, "psharp", "--mu", "3,1", "--lambda", "2,1")
    assert code == 2


def test_budget_guard_and_force(capsys):
    code, _, err = run(capsys, "kerov", "--k", "12")
    assert code == 2
    assert "cap" in err
    # force works on a still-feasible size
    code, out, err = run(capsys, "stanley", "--k", "4", "--m", "2", "--force")
    assert code == 0


def test_deterministic_output(capsys):
    first = run(capsys, "stanley", "--k", "3", "--m", "2")
    second = run(capsys, "stanley", "--k", "3", "--m", "2")
    assert first == second


def test_positivity_exit_code_and_text(capsys):
    code, out, _ = run(capsys, "positivity", "--kmax", "3", "--m", "2")
    assert code == 0
    assert "all positive" in out
    assert "k=3" in out


def test_positivity_json(capsys):
    code, out, _ = run(capsys, "positivity", "--kmax", "2", "--m", "1",
                       "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert all(entry["ok"] for entry in payload)


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "paper", "--items", "kerov-r")
    assert code == 0
    assert out.count("pass") == 6


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "smoke")
    assert code == 2


def test_verify_no_matching_items(capsys):
    code, _, err = run(capsys, "verify", "--items", "zzz-no-such")
    assert code == 2


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--items", "interlacing", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload[0]["status"] == "pass"
    assert {"index", "item", "statement", "status", "detail"} <= set(payload[0])


def test_positivity_outdir_writes_csv_and_figures(tmp_path, capsys):
    code, _, err = run(capsys, "positivity", "--kmax", "3", "--m", "2",
                       "--outdir", str(tmp_path))
    assert code == 0
    csv_path = tmp_path / "positivity.csv"
    assert csv_path.exists()
    with csv_path.open() as handle:
        rows = list(csv.DictReader(handle))
    assert {row["check"] for row in rows} >= {"full", "top", "gamma"}
    assert all(row["positive"] == "yes" for row in rows)
    for name in ("positivity_status.png", "positivity_monomials.png"):
        png = tmp_path / name
        assert png.exists() and png.stat().st_size > 1000


def test_verify_outdir_writes_report(tmp_path, capsys):
    code, _, _ = run(capsys, "verify", "--items", "free-cumulants",
                     "--outdir", str(tmp_path))
    assert code == 0
    assert (tmp_path / "verify.csv").exists()
    assert (tmp_path / "verify_status.png").stat().st_size > 1000


def test_report_module_direct(tmp_path):
    rows = positivity_report(2, 2)
    written = write_positivity_report(rows, tmp_path / "pos")
    assert all(path.exists() for path in written)
    results = run_suite("interlacing")
    written = write_verify_report(results, tmp_path / "ver")
    assert all(path.exists() for path in written)
