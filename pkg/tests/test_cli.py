import json
import subprocess
import sys

import pytest

from overcrank.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_counts_json(capsys):
    code, out, _ = run(capsys, "counts", "--n", "3", "--stat", "crank1", "--format", "json")
    assert code == 0
    assert out.strip() == '{"-3":1,"-2":1,"-1":1,"0":2,"1":1,"2":1,"3":1}'


def test_counts_defaults(capsys):
    assert run(capsys, "counts", "--n", "0", "--stat", "crank1")[1].strip() == '{"0":1}'
    assert run(capsys, "counts", "--n", "4", "--stat", "m2crank")[1].strip() == '{"-2":1,"0":1,"2":1}'


def test_counts_tsv(capsys):
    code, out, _ = run(capsys, "counts", "--n", "4", "--stat", "crank2", "--format", "tsv")
    assert code == 0
    assert out.splitlines() == ["m\tcount", "-2\t1", "-1\t3", "0\t6", "1\t3", "2\t1"]


def test_counts_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["counts", "--n", "3", "--stat", "nope"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "counts", "--n", "-2", "--stat", "crank")
    assert code == 2 and "nonnegative" in err


def rows(out):
    return [line.split("\t") for line in out.splitlines() if not line.startswith("#")]


def test_table_one(capsys):
    code, out, _ = run(capsys, "table", "--paper", "1")
    assert code == 0
    table = rows(out)
    assert len(table) == 9
    assert table[4] == ["2̅+1", "2", "", "1", "-1", "-1"]
    assert table[2] == ["3̅", "3", "1", "∅", "", "1"]


def test_table_two(capsys):
    _, out, _ = run(capsys, "table", "--paper", "2")
    table = rows(out)
    assert [r[1] for r in table[1:]] == ["3", "0", "0", "2", "0", "-3", "-2"]
    assert ["1+1+1", "-3"] in table
    footer = [line for line in out.splitlines() if line.startswith("#")]
    assert "2̅+1" in footer[0] and "-1 at m=0" in footer[0]


def test_table_three(capsys):
    _, out, _ = run(capsys, "table", "--paper", "3")
    table = rows(out)
    assert len(table) == 15
    assert table[8] == ["2̅+2", "2", "1", "2", "-1", "-1"]
    assert [r[-1] for r in table[1:]] == ["2", "1", "0", "1", "0", "0", "-2", "-1", "-1", "1", "-1", "0", "0", "0"]


def test_series_json(capsys):
    code, out, _ = run(capsys, "series", "--name", "C", "--order", "1")
    assert code == 0
    assert json.loads(out)["coeffs"][1] == [[-1, 1], [0, -1], [1, 1]]
    _, out, _ = run(capsys, "series", "--name", "psi", "--order", "0")
    assert json.loads(out)["coeffs"] == [[]]


def test_series_text(capsys):
    _, out, _ = run(capsys, "series", "--name", "Cbar2", "--order", "4", "--format", "text")
    assert out.splitlines()[4] == "q^4\t[(-2, 1), (-1, 3), (0, 6), (1, 3), (2, 1)]"


def test_series_unknown_name():
    with pytest.raises(SystemExit) as exc:
        main(["series", "--name", "eta", "--order", "3"])
    assert exc.value.code == 2


def test_verify_one(capsys):
    code, out, _ = run(capsys, "verify", "--id", "thm-M1", "--order", "12")
    assert code == 0
    assert json.loads(out) == {"first_mismatch": None, "holds": True, "id": "thm-M1", "order": 12}
    code, out, _ = run(capsys, "verify", "--id", "tenth-phi", "--order", "6")
    assert code == 0 and json.loads(out)["holds"]


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--id", "m2rank-chi", "--order", "3")
    assert code == 1
    assert json.loads(out)["first_mismatch"]["n"] == 1


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "--id", "nope")
    assert code == 2 and "nope" in err


def test_verify_all_emits_registry_order(capsys):
    _, out, _ = run(capsys, "verify", "--all", "--order", "2", "--jobs", "2")
    ids = [json.loads(line)["id"] for line in out.splitlines()]
    assert len(ids) == 13 and ids[0] == "thm-M1" and ids[-1] == "m2-combo-chi"


def test_output_is_deterministic(capsys):
    first = run(capsys, "verify", "--all", "--order", "3")[1]
    second = run(capsys, "verify", "--all", "--order", "3", "--jobs", "3")[1]
    assert first == second
    assert run(capsys, "table", "--paper", "3")[1] == run(capsys, "table", "--paper", "3")[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "overcrank", "counts", "--n", "4", "--stat", "crank2"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.strip() == '{"-2":1,"-1":3,"0":6,"1":3,"2":1}'
