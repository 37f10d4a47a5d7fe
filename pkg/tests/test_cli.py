import json
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from curvosc.cli import fmt_float, main, serialize_csv, serialize_json


def load_schema():
    with resources.files("curvosc").joinpath("schemas/output.schema.json").open() as fh:
        return json.load(fh)


def run_to_file(tmp_path: Path, name: str, args: list[str]) -> tuple[int, str]:
    out = tmp_path / name
    code = main(args + ["--output", str(out)])
    return code, out.read_text() if out.exists() else ""


class TestFormatting:
    def test_float_format(self):
        assert fmt_float(0.5) == "5.00000000000000000e-01"
        assert fmt_float(-1.0) == "-1.00000000000000000e+00"
        assert "e" in fmt_float(1e100) and "E" not in fmt_float(1e100)

    def test_json_roundtrips(self):
        doc = {"a": [1.5, None, True], "b": "x\"y", "c": 3}
        assert json.loads(serialize_json(doc)) == doc

    def test_csv_header_and_blank_none(self):
        text = serialize_csv(["a", "b"], [[1.0, None], [2.0, 3.0]])
        lines = text.strip().splitlines()
        assert lines[0] == "a,b"
        assert lines[1].endswith(",")


class TestValidation:
    def test_spectrum_needs_model(self, capsys):
        assert main(["spectrum"]) == 1
        assert "model" in capsys.readouterr().err

    def test_qes1_needs_l(self, tmp_path, capsys):
        code, _ = run_to_file(tmp_path, "x.json",
                              ["potential", "--model", "qes1", "--mprime-q", "1"])
        assert code == 1
        assert "--l" in capsys.readouterr().err

    def test_l_only_for_qes1(self, tmp_path, capsys):
        code, _ = run_to_file(tmp_path, "x.json",
                              ["potential", "--model", "higgs", "--l", "2"])
        assert code == 1

    def test_crs_needs_channel(self, tmp_path, capsys):
        code, _ = run_to_file(tmp_path, "x.json", ["potential", "--model", "crs"])
        assert code == 1

    def test_unknown_suite(self, capsys):
        assert main(["verify", "--suite", "no-such-suite"]) == 1


class TestTables:
    def test_spectrum_schema_and_accuracy(self, tmp_path):
        code, text = run_to_file(tmp_path, "spec.json", [
            "spectrum", "--model", "higgs", "--lambda", "1", "--omega", "1",
            "--n-max", "2", "--mprime-max", "2"])
        assert code == 0
        doc = json.loads(text)
        jsonschema.validate(doc, load_schema())
        assert len(doc["rows"]) == 9
        assert all(row[4] < 1e-5 for row in doc["rows"])

    def test_spectrum_csv_header(self, tmp_path):
        code, text = run_to_file(tmp_path, "spec.csv", [
            "spectrum", "--model", "higgs", "--n-max", "0", "--mprime-max", "0",
            "--format", "csv"])
        assert code == 0
        assert text.splitlines()[0] == "N,mprime,E_analytic,E_numeric,relative_error"

    def test_qes1_l2_potential_is_oscillator(self, tmp_path):
        code, text = run_to_file(tmp_path, "pot.json", [
            "potential", "--model", "qes1", "--l", "2", "--mprime-q", "1",
            "--lambda", "1", "--grid-min", "0.2", "--grid-max", "3.0",
            "--grid-n", "40"])
        assert code == 0
        doc = json.loads(text)
        jsonschema.validate(doc, load_schema())
        diffs = [abs(v - 0.5 * r * r) for r, v in doc["rows"]]
        assert max(diffs) < 1e-10
        assert max(diffs) == pytest.approx(min(diffs), abs=1e-10)

    def test_wavefunction_table(self, tmp_path):
        code, text = run_to_file(tmp_path, "wf.json", [
            "wavefunction", "--model", "crs", "--mprime-q", "1", "--N", "1",
            "--grid-min", "0.2", "--grid-max", "2.0", "--grid-n", "10"])
        assert code == 0
        doc = json.loads(text)
        jsonschema.validate(doc, load_schema())
        assert doc["columns"] == ["coordinate", "value_real", "value_imag"]
        assert len(doc["rows"]) == 10

    def test_transform_check_constant_difference(self, tmp_path):
        code, text = run_to_file(tmp_path, "tc.json", [
            "transform-check", "--mprime-q", "0.5", "--grid-n", "20"])
        assert code == 0
        doc = json.loads(text)
        jsonschema.validate(doc, load_schema())
        assert all(abs(row[3]) < 1e-10 for row in doc["rows"])


class TestVerifyCommand:
    def test_exit_zero_and_schema(self, tmp_path):
        code, text = run_to_file(tmp_path, "rep.json", [
            "verify", "--suite", "flat-limit", "--suite", "special-functions"])
        assert code == 0
        doc = json.loads(text)
        jsonschema.validate(doc, load_schema())
        assert doc["passed"] is True

    def test_determinism_byte_identical(self, tmp_path):
        args = ["verify", "--suite", "transform-closure", "--suite", "crs-model",
                "--suite", "numerics-oracle"]
        _, a = run_to_file(tmp_path, "a.json", args)
        _, b = run_to_file(tmp_path, "b.json", args)
        assert a == b
        assert len(a) > 0
