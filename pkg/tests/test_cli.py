import csv
import io
import json
import re
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

from wavecount.cli import run

SCHEMA = json.loads((Path(__file__).resolve().parents[1] / "schema" / "output.json").read_text())
RATIONAL = re.compile(r"^-?[0-9]+(/[0-9]+)?$")

COMMANDS = [
    ["denum", "--degrees", "2,3", "--l", "0..12"],
    ["denum", "--degrees", "4,6", "--l", "0..20", "--method", "all"],
    ["waves", "--degrees", "2,1"],
    ["waves", "--degrees", "3,4", "--var", "l", "--l", "7"],
    ["ehrhart", "--degrees", "3,4"],
    ["ehrhart", "--degrees", "1,1,1", "--l", "5"],
    ["tiling", "--name", "tetrahedral", "--lmax", "12"],
    ["tiling", "--name", "lune", "--q", "3", "--lmax", "8", "--bc", "dirichlet"],
    ["molien", "--name", "icosahedral", "--order", "30"],
    ["weyl", "--degrees", "3,4"],
    ["weyl", "--degrees", "2,3,4", "--midpoint", "computed"],
    ["heatk", "--degrees", "2,3,5"],
    ["verify", "--suite", "exact"],
]


def invoke(argv):
    buf = io.StringIO()
    code = run(argv, buf)
    return code, buf.getvalue()


def ids(argv):
    return " ".join(argv)


@pytest.mark.parametrize("argv", COMMANDS, ids=ids)
def test_json_validates(argv):
    code, text = invoke(argv + ["--format", "json"])
    assert code == 0
    record = json.loads(text)
    jsonschema.validate(record, SCHEMA)
    assert record["command"] == argv[0] and record["status"] == "ok"


@pytest.mark.parametrize("argv", COMMANDS, ids=ids)
def test_deterministic(argv):
    assert invoke(argv + ["--format", "json"]) == invoke(argv + ["--format", "json"])


def _rational_strings(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _rational_strings(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _rational_strings(v)
    elif isinstance(obj, str) and RATIONAL.match(obj):
        yield obj


@pytest.mark.parametrize("argv", COMMANDS, ids=ids)
def test_rationals_round_trip(argv):
    _, text = invoke(argv + ["--format", "json"])
    for s in _rational_strings(json.loads(text)):
        f = Fraction(s)
        assert str(f) == s


def test_denum_values_across_formats():
    argv = ["denum", "--degrees", "2,3", "--l", "0..7"]
    rows = json.loads(invoke(argv + ["--format", "json"])[1])["results"]["rows"]
    assert [r["series"] for r in rows] == [1, 0, 1, 1, 1, 1, 2, 1]
    # csv: key/value block, blank line, then the row table
    table_text = invoke(argv + ["--format", "csv"])[1].split("\n\n", 1)[1]
    table = list(csv.DictReader(io.StringIO(table_text)))
    assert [int(r["series"]) for r in table] == [1, 0, 1, 1, 1, 1, 2, 1]
    text = invoke(argv + ["--format", "text"])[1]
    body = [line.split() for line in text.splitlines() if line.strip() and line.split()[0].isdigit()]
    assert [int(r[1]) for r in body] == [1, 0, 1, 1, 1, 1, 2, 1]


def test_waves_in_l():
    res = json.loads(invoke(["waves", "--degrees", "2,1", "--var", "l", "--format", "json"])[1])["results"]
    assert res["W1"]["text"] == "1/2·l + 3/4"
    assert res["W2"]["text"] == "1/4"
    csv_text = invoke(["waves", "--degrees", "2,1", "--var", "l", "--format", "csv"])[1]
    assert "1/2·l + 3/4" in csv_text


def test_tetrahedral_cli():
    res = json.loads(invoke(["tiling", "--name", "tetrahedral", "--lmax", "6", "--format", "json"])[1])["results"]
    assert res["degeneracies"] == [1, 0, 0, 1, 1, 0, 2]
    assert res["a_N"] == "1/2" and res["d0"] == 6


def test_ehrhart_cli():
    res = json.loads(invoke(["ehrhart", "--degrees", "3,4", "--format", "json"])[1])["results"]
    assert res["poly_part_l"]["text"] == "1/24·l^2 + 1/3·l + 83/144"


def test_approx_is_extra_column():
    _, text = invoke(["heatk", "--degrees", "2,1", "--format", "json", "--approx", "6"])
    record = json.loads(text)
    jsonschema.validate(record, SCHEMA)
    assert "1/4" in text


def test_usage_errors_exit_2(capsys):
    assert invoke(["denum", "--l", "0..3"])[0] == 2
    assert "--degrees" in capsys.readouterr().err
    assert invoke(["denum", "--degrees", "2,x", "--l", "1"])[0] == 2
    assert invoke(["tiling", "--name", "cubical", "--lmax", "3"])[0] == 2
    assert "cubical" in capsys.readouterr().err
    assert invoke(["denum", "--degrees", "2,3", "--l", "5..1"])[0] == 2


def test_verify_failure_exit_1():
    code, text = invoke(["verify", "--suite", "acceptance", "--format", "json"])
    record = json.loads(text)
    jsonschema.validate(record, SCHEMA)
    failed = [r["check"] for r in record["results"]["rows"] if not r["passed"]]
    assert code == (1 if failed else 0)
    assert record["status"] == ("verification_failed" if failed else "ok")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wavecount", "denum", "--degrees", "1,2", "--l", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "3" in proc.stdout
