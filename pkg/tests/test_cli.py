import json

import jsonschema
import pytest

from hfconcordance.cli import main
from hfconcordance.records import OBSTRUCT_CSV_COLUMNS, OutputRecord, load_schema


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    record = json.loads(out)
    jsonschema.validate(record, load_schema())
    return record


def test_alexander_t45(capsys):
    code, out, _ = run(capsys, "alexander", "T(4,5)")
    assert code == 0
    assert "staircase: (1, 2, 3)" in out
    assert out.startswith("# hfconcordance ")


def test_alexander_k3_json(capsys):
    rec = run_json(capsys, "alexander", "Kn 3")
    assert rec["results"]["staircase"] == [1, 1, 1, 2, 3, 3]
    assert rec["results"]["polynomial"].endswith("t^22")


def test_vk_family_with_oracle(capsys):
    rec = run_json(capsys, "vk", "2*Kn(1) # -T(2,5)", "--k", "0..2", "--check-oracle")
    assert [v["V"] for v in rec["results"]["V"]] == [2, 1, 1]
    assert rec["results"]["oracle_agrees"]


def test_vk_representative_staircase(capsys):
    rec = run_json(capsys, "vk", "T(2,3) # T(3,4)", "--check-oracle")
    assert rec["results"]["representative_staircase"] == [1, 1, 2]
    assert [v["V"] for v in rec["results"]["V"]] == [2, 1, 1, 1, 0]


def test_vk_falls_back_for_incompatible_shapes(capsys):
    code, out, err = run(capsys, "vk", "T(2,3) # T(4,5)", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["results"]["method"] == "tensor"
    assert "tensor" in err


def test_dinv_unknot_table(capsys):
    rec = run_json(capsys, "dinv", "9", "4")
    rows = {r["label"]: r for r in rec["results"]["d"]}
    assert rows[0]["d_unknot"] == rows[6]["d_unknot"] == "0"
    assert rec["results"]["spin_label"] == 6
    assert rows[6]["spin"]


def test_dinv_family_label(capsys):
    rec = run_json(capsys, "dinv", "9", "4", "2*Kn(2)#-T(2,5)", "6")
    assert rec["results"]["d"] == [{"label": 6, "d_unknot": "0", "d": "-6", "spin": True}]


def test_obstruct_csv(capsys):
    code, out, _ = run(capsys, "obstruct", "--n", "1..3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split(",") == list(OBSTRUCT_CSV_COLUMNS)
    assert lines[1] == "1,2,1,0,-2,-2,-2,obstructed"
    assert len(lines) == 4


def test_obstruct_json_round_trip_and_determinism(capsys):
    first = run(capsys, "obstruct", "--n", "2", "--format", "json")[1]
    second = run(capsys, "obstruct", "--n", "2", "--format", "json")[1]
    assert first == second
    rec = OutputRecord.from_json(first)
    assert rec.to_json() == first
    jsonschema.validate(json.loads(first), load_schema())
    assert rec.results["reports"][0]["dbar_values"] == {"0": "0", "3": "-2", "6": "-2"}


@pytest.mark.parametrize(
    "argv",
    [
        ["alexander", "T(2,"],
        ["vk", "C(2,1; T(2,3))"],
        ["vk", "U # -T(2,3)"],
        ["dinv", "9", "-4"],
        ["dinv", "9", "4", "12"],
        ["obstruct", "--n", "3..1"],
        ["obstruct", "--n", "x"],
    ],
)
def test_input_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err


def test_unknown_subcommand_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_oracle_mismatch_exits_2(capsys, monkeypatch):
    from hfconcordance import reduced

    monkeypatch.setattr(reduced, "fast_vs", lambda tower, kmax: [99] * (kmax + 1))
    code, _, err = run(capsys, "vk", "T(2,3)", "--check-oracle")
    assert code == 2
    assert "internal check failed" in err


def test_module_entry_point():
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-m", "hfconcordance", "alexander", "T(2,3)", "--format", "csv"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout == "exponent,coefficient\n0,1\n1,-1\n2,1\n"
