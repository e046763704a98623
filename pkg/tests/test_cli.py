import csv
import io
import json
import random
import subprocess
import sys

import pytest

from braidinv import BraidWord, closure_components
from braidinv.cli import (
    corollary_table,
    family_exponents,
    family_word,
    last_block_arrows,
    main,
    murasugi_check,
    random_knot_words,
    recurrence_check,
    theorem_table,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_family_word():
    assert family_word(0).letters == ()
    assert family_word(2).letters == (1, -2, 1, -2)
    assert family_word(2).strands == 3


def test_family_exponents_skip_multiples_of_three():
    assert family_exponents(10) == [1, 2, 4, 5, 7, 8, 10]
    assert family_exponents(16)[-1] == 16
    assert len(family_exponents(16)) == 11


def test_last_block_arrows():
    assert list(last_block_arrows(4)) == [2, 3, 4, 5, 6, 7]
    assert list(last_block_arrows(3)) == [0, 1, 2, 3, 4, 5]
    with pytest.raises(ValueError):
        last_block_arrows(2)


def test_random_knot_words_are_knots_and_deterministic():
    words = random_knot_words(random.Random(3), 40)
    again = random_knot_words(random.Random(3), 40)
    assert words == again
    assert len(words) == 40
    for w in words:
        assert closure_components(w) == 1
        assert 1 <= len(w) <= 10
        assert w.strands == 3


def test_theorem_table_values():
    rows = theorem_table(5)
    assert [r.n for r in rows] == [1, 2, 4, 5]
    second = rows[1]
    assert (second.c2, second.det, second.lucas_pred) == (-1, 5, 5)
    assert second.arf_gauss == second.arf_oracle == 1
    assert all(r.match_arf and r.match_det for r in rows)


def test_recurrence_check_cases():
    for case in (1, 2):
        steps = recurrence_check(case, 4)
        assert [s.n for s in steps] == [1, 2, 3, 4]
        assert all(s.parity_ok and s.deletion_ok for s in steps)
        assert steps[0].high_power == 3 + case
        assert steps[0].low_power == case


def test_murasugi_check_consistency():
    rows = murasugi_check(5, samples=20, seed=9)
    assert len(rows) == 4 + 20
    assert all(r.consistent for r in rows)
    assert murasugi_check(5, samples=20, seed=9) == rows
    assert murasugi_check(5, samples=20, seed=10) != rows


def test_corollary_table_rows():
    rows = corollary_table(2)
    assert len(rows) == 8
    by_family = {(r.n, r.family): r for r in rows}
    r = by_family[(1, "12n-2")]
    assert (r.lucas_value, r.residue8, r.residue8_minus2) == (123, 3, 1)
    assert r.square_check == (True, 11)
    r = by_family[(1, "12n+4")]
    assert (r.lucas_value, r.residue8) == (2207, 7)
    assert r.square_check is None
    assert all(r.ok for r in rows)


def test_cli_invariants_json(capsys):
    code, out, err = run_cli(
        capsys, "invariants", "--braid", "1 -2", "--power", "2", "--format", "json"
    )
    assert code == 0
    record = json.loads(out)
    assert record == {
        "word": "1 -2 1 -2",
        "strands": 3,
        "word_length": 4,
        "components": 1,
        "writhe": 0,
        "c2": -1,
        "arf": 1,
        "det": 5,
        "alexander": "-t^-1 + 3 - t",
        "conway": "1 - z^2",
        "oracle_match": True,
    }


def test_cli_invariants_unknot(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--braid", "", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert (record["det"], record["alexander"]) == (1, "1")


def test_cli_invariants_rejects_links(capsys):
    code, out, err = run_cli(capsys, "invariants", "--braid", "1", "--strands", "3")
    assert code == 1
    assert "not a knot" in err or "components" in err


def test_cli_invariants_rejects_bad_words(capsys):
    code, _, err = run_cli(capsys, "invariants", "--braid", "1 spam")
    assert code == 2
    assert "spam" in err
    code, _, _ = run_cli(capsys, "invariants", "--braid", "1", "--power", "-1")
    assert code == 2
    code, _, _ = run_cli(capsys, "invariants", "--braid", "1", "--strands", "0")
    assert code == 2


def test_cli_theorem_csv_golden(capsys):
    code, out, _ = run_cli(capsys, "theorem", "--max", "16", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    assert lines[0] == (
        "n,word_length,components,arf_gauss,arf_oracle,c2,det,lucas_pred,"
        "match_arf,match_det"
    )
    assert lines[2] == "2,4,1,1,1,-1,5,5,true,true"
    assert lines[-1] == "16,32,1,1,1,5,4870845,4870845,true,true"


def test_cli_json_and_csv_carry_the_same_data(capsys):
    code, json_out, _ = run_cli(capsys, "theorem", "--max", "5", "--format", "json")
    assert code == 0
    records = json.loads(json_out)
    code, csv_out, _ = run_cli(capsys, "theorem", "--max", "5", "--format", "csv")
    assert code == 0
    csv_rows = list(csv.DictReader(io.StringIO(csv_out)))
    assert len(csv_rows) == len(records) > 0
    for record, row in zip(records, csv_rows):
        assert set(record) == set(row)
        for key, value in record.items():
            if isinstance(value, bool):
                expected = "true" if value else "false"
            elif value is None:
                expected = ""
            else:
                expected = str(value)
            assert row[key] == expected


def test_cli_theorem_csv_deterministic(capsys):
    _, first, _ = run_cli(capsys, "theorem", "--max", "16", "--format", "csv")
    _, second, _ = run_cli(capsys, "theorem", "--max", "16", "--format", "csv")
    assert first == second


def test_cli_format_flag_accepted_in_both_positions(capsys):
    _, before, _ = run_cli(capsys, "--format", "csv", "theorem", "--max", "5")
    _, after, _ = run_cli(capsys, "theorem", "--max", "5", "--format", "csv")
    assert before == after
    assert before.startswith("n,")


def test_cli_recurrence(capsys):
    code, out, _ = run_cli(capsys, "recurrence", "--case", "2", "--max", "3")
    assert code == 0
    assert len(out.splitlines()) == 4
    code, _, _ = run_cli(capsys, "recurrence", "--case", "3", "--max", "3")
    assert code == 2
    code, _, _ = run_cli(capsys, "recurrence", "--max", "3")
    assert code == 2


def test_cli_corollary_note_only_in_table(capsys):
    code, table_out, _ = run_cli(capsys, "corollary", "--max", "2")
    assert code == 0
    assert "note:" in table_out
    code, csv_out, _ = run_cli(capsys, "corollary", "--max", "2", "--format", "csv")
    assert code == 0
    assert "note:" not in csv_out
    assert len(csv_out.splitlines()) == 9


def test_cli_corollary_json_square_cell(capsys):
    code, out, _ = run_cli(capsys, "corollary", "--max", "1", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 4
    squares = {row["family"]: row["square_check"] for row in rows}
    assert squares["12n-2"] == {"is_square": True, "root": 11}
    assert squares["12n-4"] is None


def test_cli_murasugi_seeded(capsys):
    code, out, _ = run_cli(capsys, "murasugi", "--max", "4", "--seed", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "source,word,arf,det,residue8,consistent"
    assert len(lines) == 1 + 3 + 200
    _, again, _ = run_cli(capsys, "murasugi", "--max", "4", "--seed", "3", "--format", "csv")
    assert again == out


def test_cli_print_convention(capsys):
    code, out, _ = run_cli(capsys, "--print-convention")
    assert code == 0
    assert "c2 pattern: head-tail" in out
    assert "trefoil" in out


def test_cli_usage_errors(capsys):
    code, _, _ = run_cli(capsys)
    assert code == 2
    code, _, _ = run_cli(capsys, "theorem", "--max", "0")
    assert code == 2
    code, _, _ = run_cli(capsys, "nonsense")
    assert code == 2


def test_console_script_installed():
    out = subprocess.run(
        [sys.executable, "-m", "braidinv", "theorem", "--max", "2", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert out.stdout.splitlines()[-1].startswith("2,")


def test_cli_survives_closed_pipe():
    # cli | head must not spray a BrokenPipeError traceback.  The row count
    # is chosen so the output overflows a 64 KiB pipe buffer and the writer
    # really does see the pipe close under it.
    out = subprocess.run(
        f"{sys.executable} -m braidinv corollary --max 200 --format csv | head -2",
        shell=True,
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert len(out.stdout.splitlines()) == 2
    assert "BrokenPipeError" not in out.stderr
    assert "Traceback" not in out.stderr
