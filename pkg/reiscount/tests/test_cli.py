# -*- coding: utf-8 -*-
import json

import pytest

from reiscount.protocol.report import RunReport
from reiscount.tools.reisctl import run


def _json(capsys, argv, code=0):
    assert run(argv) == code
    out = capsys.readouterr().out
    RunReport.loads(out)
    return json.loads(out)


def test_count_both_n24(capsys):
    data = _json(capsys, ["count", "--n", "24", "--gap", "1", "--rotsym", "--method", "both", "--no-timing"])
    assert data["values"] == {"formula": "30", "oracle": "30"}
    assert data["matches"] is True
    assert "elapsed_ms" not in data


def test_count_formula_default(capsys):
    data = _json(capsys, ["count", "--n", "24", "--gap", "1", "--rotsym", "--diameter", "--k", "8"])
    assert data["method"] == "formula"
    assert data["value"] == "6"
    assert data["query"] == {"n": 24, "alphabet": 2, "gap": 1, "rotsym": True, "diameter": True, "k": 8}
    assert isinstance(data["elapsed_ms"], int)


def test_ternary_both_is_flagged(capsys):
    data = _json(capsys, ["count", "--n", "12", "--alphabet", "3", "--gap", "1", "--rotsym",
                          "--method", "both", "--no-timing"], code=1)
    assert data["values"] == {"formula": "13", "oracle": "15"}
    assert data["known_divergence"] is True


def test_ternary_formula_falls_back_to_oracle(capsys):
    data = _json(capsys, ["count", "--n", "12", "--alphabet", "3", "--gap", "1", "--rotsym",
                          "--method", "formula", "--no-timing"])
    assert data["method"] == "oracle" and data["value"] == "15"
    assert data["notes"]

    data = _json(capsys, ["count", "--n", "12", "--alphabet", "3", "--gap", "1", "--rotsym",
                          "--method", "formula", "--allow-approx", "--no-timing"])
    assert data["method"] == "formula" and data["value"] == "13"


def test_axis_filter_is_oracle_only(capsys):
    data = _json(capsys, ["count", "--n", "24", "--gap", "1", "--rotsym", "--axis", "point:0-1", "--no-timing"])
    assert data["method"] == "oracle" and data["value"] == "3"
    assert run(["count", "--n", "24", "--gap", "1", "--rotsym", "--axis", "no-axis", "--method", "formula"]) == 2
    assert "REFUSE.DOMAIN" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["count", "--n", "0"],
    ["count", "--n", "4", "--k", "5"],
    ["count", "--n", "4", "--alphabet", "5"],
    ["count", "--n", "40", "--method", "oracle"],
    ["count", "--n", "4", "--bogus"],
    ["frobnicate"],
    ["tables", "--which", "3"],
])
def test_bad_arguments_exit_2(capsys, argv):
    assert run(argv) == 2
    assert capsys.readouterr().err


def test_enumerate_tsv(capsys):
    assert run(["enumerate", "--n", "6", "--gap", "1", "--rotsym"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["1\t001001\t2", "2\t010101\t3"]


def test_enumerate_json(capsys):
    data = _json(capsys, ["enumerate", "--n", "6", "--gap", "1", "--rotsym", "--format", "json", "--no-timing"])
    assert data["classes"] == ["001001", "010101"]
    assert data["value"] == "2"


def test_tables_check(capsys):
    data = _json(capsys, ["tables", "--which", "1", "--check", "--format", "json", "--no-timing"])
    assert data["matches"] is True and data["items"] == []
    assert data["histogram"]["k=6"] == 9

    data = _json(capsys, ["tables", "--which", "2", "--check", "--format", "json", "--no-timing"])
    assert data["value"] == "15" and data["matches"] is True
    assert any("printed row 11" in note for note in data["notes"])


def test_tables_text(capsys):
    assert run(["tables", "--which", "1"]) == 0
    out = capsys.readouterr().out
    assert "configuration" in out


def test_axes(capsys):
    data = _json(capsys, ["axes", "--n", "24", "--gap", "1", "--rotsym", "--no-timing"])
    assert data["value"] == "30"
    assert data["histogram"]["no-axis"] == 5
    assert data["histogram"]["gap-gap-only"] == 4
    assert data["histogram"]["point:0-1"] == 3


def test_verify_ternary(capsys):
    data = _json(capsys, ["verify", "--suite", "ternary", "--no-timing"])
    assert data["matches"] is True
    assert data["summary"]["failed"] == 0


def test_verify_ternary_refuses_grid_options(capsys):
    assert run(["verify", "--suite", "ternary", "--n-max", "14"]) == 2
    assert "REFUSE.DOMAIN" in capsys.readouterr().err


def test_verify_lemmas_small(capsys):
    data = _json(capsys, ["verify", "--suite", "lemmas", "--n-max", "30", "--gap-max", "3", "--no-timing"])
    assert data["matches"] is True
    assert data["items"] == []


def test_output_is_stable(capsys):
    argv = ["count", "--n", "20", "--gap", "2", "--method", "both", "--no-timing"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first


@pytest.mark.slow
def test_verify_cross_acceptance_grid(capsys):
    data = _json(capsys, ["verify", "--suite", "cross", "--n-max", "14", "--gap-max", "2", "--no-timing"])
    assert data["matches"] is True
