"""CLI surface: output shapes, exit codes, stdout purity, determinism."""

import json

import pytest

from richlab.bounds import BOUND_IDS
from richlab.cli import AnalysisReport, _portable, analysis_report, main
from richlab.words import Word

W3 = "1100100010011001010"
WG = "5112211311001131133114111146"
WITNESS = "00101100110100"  # non-rich palindrome; forced B9 fails at n=4


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- analyze


def test_analyze_golden(capsys):
    code, out, _ = run(capsys, ["analyze", "0110"])
    assert code == 0
    assert json.loads(out) == {
        "word": "0110",
        "alphabet_size": 2,
        "rich": True,
        "defect": 0,
        "factor_counts": [1, 2, 3, 2, 1],
        "palindromic_counts": [1, 2, 1, 0, 1],
        "switch_counts": [0, 0, 0, 2, 0],
        "max_switch_count": 2,
        "lps": "0110",
        "lpp": "0110",
        "lpps": "0",
        "lppp": "0",
    }


def test_analyze_empty_word(capsys):
    code, out, _ = run(capsys, ["analyze", ""])
    assert code == 0
    d = json.loads(out)
    assert d["rich"] and d["defect"] == 0
    assert d["factor_counts"] == [1]
    assert d["lps"] is None and d["lppp"] is None


def test_analyze_switch_counts(capsys):
    code, out, _ = run(capsys, ["analyze", WG])
    d = json.loads(out)
    assert code == 0
    assert d["switch_counts"][8] == 3
    assert d["max_switch_count"] == 16
    assert d["rich"]


def test_analyze_explicit_alphabet(capsys):
    code, out, _ = run(capsys, ["analyze", "abba", "--alphabet", "ab"])
    assert code == 0
    d = json.loads(out)
    # words render in the canonical display alphabet, whatever was parsed
    assert d["word"] == "0110" and d["alphabet_size"] == 2


def test_analysis_report_round_trip():
    report = analysis_report(Word.parse(W3))
    assert AnalysisReport.from_json_dict(report.to_json_dict()) == report


# ---------------------------------------------------------------- switches


def test_switches_json_lines(capsys):
    code, out, _ = run(capsys, ["switches", WG, "--n", "8"])
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["word"] for r in rows] == ["14111146", "31133114", "51122113"]
    assert rows[0] == {"left": "1", "core": "411114", "right": "6", "word": "14111146"}


def test_switches_empty_result(capsys):
    code, out, _ = run(capsys, ["switches", "0110", "--n", "2"])
    assert code == 0 and out == ""


# ---------------------------------------------------------------- closure


def test_closure_output(capsys):
    assert run(capsys, ["closure", "011"]) == (0, "0110\n", "")
    assert run(capsys, ["closure", "12321"])[1] == "12321\n"


# ---------------------------------------------------------------- verify


def test_verify_single_bound_golden(capsys):
    code, out, _ = run(capsys, ["verify", W3, "--bounds", "B8", "--n", "3"])
    assert code == 0
    (report,) = json.loads(out)
    assert report["bound_id"] == "B8"
    assert report["holds"] and report["equality"]
    assert report["detail"] == "3+2 = 10-7+2"


def test_verify_all_bounds_exit_zero(capsys):
    code, out, _ = run(capsys, ["verify", W3])
    assert code == 0
    reports = json.loads(out)
    assert {r["bound_id"] for r in reports} == set(BOUND_IDS)
    assert all(r["holds"] for r in reports)


def test_verify_forced_violation_exits_one(capsys):
    code, out, _ = run(
        capsys, ["verify", WITNESS, "--bounds", "B9", "--n", "4", "--force"]
    )
    assert code == 1
    (report,) = json.loads(out)
    assert not report["holds"] and not report["covered"]
    assert (report["lhs"], report["rhs"]) == (10, 8)
    assert report["detail"] == "10 <= 2*3*2 - 2*3 + 2 = 8"


def test_verify_non_rich_without_force_is_usage_error(capsys):
    code, out, err = run(capsys, ["verify", WITNESS, "--bounds", "B1", "--n", "3"])
    assert code == 2 and out == ""
    assert "error:" in err


def test_verify_conflicting_order_flags(capsys):
    code, _, err = run(capsys, ["verify", W3, "--n", "3", "--all-n"])
    assert code == 2
    assert "mutually exclusive" in err


def test_verify_unknown_bound_id(capsys):
    code, _, err = run(capsys, ["verify", W3, "--bounds", "B99"])
    assert code == 2
    assert "unknown bound ids" in err and "B12" in err


def test_verify_with_closure_adds_reports(capsys):
    _, base, _ = run(capsys, ["verify", W3, "--bounds", "B8"])
    _, more, _ = run(capsys, ["verify", W3, "--bounds", "B8", "--with-closure"])
    assert len(json.loads(more)) > len(json.loads(base))


# ---------------------------------------------------------------- parse errors


def test_parse_error_names_the_character(capsys):
    code, out, err = run(capsys, ["analyze", "01!"])
    assert code == 2 and out == ""
    assert "'!'" in err and "position 3" in err


def test_alphabet_violation_is_a_parse_error(capsys):
    code, _, err = run(capsys, ["analyze", "abc", "--alphabet", "ab"])
    assert code == 2
    assert "'c'" in err


# ---------------------------------------------------------------- enumerate


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, ["enumerate", "--q", "2", "--max-len", "8", "--csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,count"
    assert lines[1] == "0,1"
    assert lines[-1] == "8,252"


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, ["enumerate", "--q", "3", "--max-len", "4"])
    assert code == 0
    d = json.loads(out)
    assert (d["q"], d["max_len"], d["canonical"]) == (3, 4, False)
    assert d["counts"][-1] == {"n": 4, "count": 75}


def test_enumerate_emit(tmp_path, capsys):
    target = tmp_path / "words.txt"
    code, out, _ = run(
        capsys, ["enumerate", "--q", "2", "--max-len", "3", "--emit", str(target)]
    )
    assert code == 0
    lines = target.read_text(encoding="ascii").split("\n")
    assert lines.pop() == ""  # trailing newline
    assert lines == ["", "0", "1", "00", "01", "10", "11",
                     "000", "001", "010", "011", "100", "101", "110", "111"]
    # the JSON still reports per-length counts
    assert [c["count"] for c in json.loads(out)["counts"]] == [1, 2, 4, 8]


def test_enumerate_emit_conflicts_with_count_only(capsys, tmp_path):
    code, _, err = run(
        capsys,
        ["enumerate", "--q", "2", "--max-len", "3", "--count-only",
         "--emit", str(tmp_path / "x")],
    )
    assert code == 2
    assert "mutually exclusive" in err


def test_enumerate_canonical(capsys):
    code, out, _ = run(
        capsys, ["enumerate", "--q", "2", "--max-len", "6", "--canonical"]
    )
    assert code == 0
    assert [c["count"] for c in json.loads(out)["counts"]] == [1, 1, 2, 4, 8, 16, 32]


# ---------------------------------------------------------------- sweep


def test_sweep_csv_and_timing_on_stderr(capsys):
    code, out, err = run(capsys, ["sweep", "--q", "2", "--max-len", "6", "--csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == ("bound_id,words,reports,passes,violations,equalities,"
                        "uncovered,min_slack_log2,max_slack_log2")
    assert len(lines) == 1 + len(BOUND_IDS)
    assert all(line.split(",")[4] == "0" for line in lines[1:])  # no violations
    assert "sweep took" in err


def test_sweep_json_is_byte_identical_across_runs(capsys):
    _, first, _ = run(capsys, ["sweep", "--q", "2", "--max-len", "5"])
    _, second, _ = run(capsys, ["sweep", "--q", "2", "--max-len", "5"])
    assert first == second
    d = json.loads(first)
    assert d["bound_ids"] == list(BOUND_IDS)
    assert "elapsed_seconds" not in d


def test_sweep_bound_subset(capsys):
    code, out, _ = run(
        capsys, ["sweep", "--q", "2", "--max-len", "5", "--bounds", "B3,B1"]
    )
    assert code == 0
    assert json.loads(out)["bound_ids"] == ["B1", "B3"]


# ---------------------------------------------------------------- oracle-check


def test_oracle_check_exhaustive(capsys):
    code, out, err = run(capsys, ["oracle-check", "--exhaustive-max-len", "4"])
    assert code == 0
    (entry,) = json.loads(out)
    assert entry["ok"] and entry["mismatches"] == []
    assert entry["words_checked"] == 31
    assert "elapsed_seconds" not in entry
    assert "q2:len4:31" in err


def test_oracle_check_cells_deterministic(capsys):
    argv = ["oracle-check", "--cells", "q3:len30:10", "--seed", "5"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second
    (entry,) = json.loads(first)
    assert entry["ok"] and entry["cell"] == "q3:len30:10"


def test_oracle_check_requires_some_work(capsys):
    code, _, err = run(capsys, ["oracle-check"])
    assert code == 2
    assert "nothing to check" in err


def test_oracle_check_bad_cell_spec(capsys):
    code, _, err = run(capsys, ["oracle-check", "--cells", "nope"])
    assert code == 2
    assert "expected the form" in err


# ---------------------------------------------------------------- plumbing


def test_unknown_subcommand_is_usage_error(capsys):
    assert run(capsys, ["bogus"])[0] == 2
    assert run(capsys, [])[0] == 2


def test_floats_are_clamped_to_twelve_significant_digits():
    assert _portable(0.1234567890123456) == 0.123456789012
    assert _portable({"x": [1.0 / 3.0]}) == {"x": [0.333333333333]}
    assert _portable(5) == 5 and _portable("s") == "s"
