"""CLI JSON documents validate against the shipped schemas."""

import json
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

from pseudolink.cli import main

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def load(name):
    return json.loads((SCHEMAS / name).read_text())


def run_json(capsys, *argv):
    code = main(list(argv))
    assert code == 0
    return json.loads(capsys.readouterr().out)


def test_diagram_schema(capsys):
    payload = run_json(capsys, "parse", "--format", "json", "--emit-diagram", "3 i 3")
    jsonschema.validate(payload["diagram"], load("diagram.schema.json"))


def test_pseudodet_schema(capsys):
    payload = run_json(capsys, "pseudodet", "--format", "json", "9*.i")
    jsonschema.validate(payload, load("pseudodet-report.schema.json"))


def test_family_report_schema(capsys):
    payload = run_json(capsys, "families", "verify", "--rows", "1,24", "--format", "json")
    jsonschema.validate(payload, load("family-report.schema.json"))


def test_census_schema(capsys, tmp_path):
    path = tmp_path / "symbols.txt"
    path.write_text("3 i 3\n(3)(i)(-3)\nbroken!\n")
    payload = run_json(capsys, "census", "--format", "json", str(path))
    jsonschema.validate(payload, load("census-report.schema.json"))
