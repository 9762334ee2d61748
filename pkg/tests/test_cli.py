import json
import pathlib

import pytest

from trigroup import cli, jsonio
from trigroup.matrix import core

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def _write(tmp_path, doc, name="in.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def _run(args, tmp_path):
    out = tmp_path / "out.json"
    code = cli.run(args + ["--out", str(out)])
    doc = json.loads(out.read_text()) if out.exists() else None
    return code, doc


class TestClassify:
    def test_parabolic_example(self, tmp_path):
        src = _write(tmp_path, jsonio.matrix_to_json(core(1, 0)))
        code, doc = _run(["classify", src], tmp_path)
        assert code == 0
        assert doc["class"] == "Parabolic"

    def test_homothety_carries_lambda(self, tmp_path):
        src = _write(tmp_path, {"rows": [["1/4", "0", "0"], ["0", "2", "0"], ["0", "0", "2"]]})
        code, doc = _run(["classify", src], tmp_path)
        assert code == 0
        assert doc["class"] == "ComplexHomothetyI"
        # repeated eigenvalue of the normalized representative Diag(1/8, 1, 1)
        assert doc["lambda"] == "1"

    def test_nontriangular_is_validation_failure(self, tmp_path):
        src = _write(tmp_path, {"rows": [["1", "0", "0"], ["0", "1", "0"], ["1", "0", "1"]]})
        code, doc = _run(["classify", src], tmp_path)
        assert code == 2
        assert "error" in doc


class TestParseErrors:
    def test_bad_json(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("not json")
        assert cli.run(["classify", str(p)]) == 3

    def test_missing_file(self):
        assert cli.run(["classify", "/nonexistent/x.json"]) == 3

    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as e:
            cli.run(["classify", "--bogus"])
        assert e.value.code == 3

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as e:
            cli.run(["frobnicate"])
        assert e.value.code == 3


class TestCaseCommands:
    def test_case_table_rows(self, tmp_path):
        code, doc = _run(["case-table"], tmp_path)
        assert code == 0
        assert len(doc) == 20
        assert doc[0] == {"case": "400", "k": 4, "m": 0, "n": 0}

    def test_case_check_single(self, tmp_path):
        src = _write(tmp_path, {"case": "310", "j": 5})
        code, doc = _run(["case-check", src], tmp_path)
        assert code == 0
        assert doc["verdict"] == "dismissed"

    def test_case_check_bad_label(self, tmp_path):
        src = _write(tmp_path, {"case": "999"})
        code, doc = _run(["case-check", src], tmp_path)
        assert code == 2

    def test_case_construct(self, tmp_path):
        src = _write(tmp_path, {"family": "Gamma1-N3", "params": {"p": 2, "q": 3}})
        code, doc = _run(["case-construct", src], tmp_path)
        assert code == 0
        assert doc["generator"]["rows"][0][0] == "2"
        assert doc["generator"]["rows"][1][2] == "3/2"

    def test_case_construct_violation(self, tmp_path):
        src = _write(tmp_path, {"family": "Gamma1-N3", "params": {"p": 1, "q": 3}})
        code, doc = _run(["case-construct", src], tmp_path)
        assert code == 2
        assert "p must be" in doc["error"]

    def test_case_validate_roundtrip(self, tmp_path):
        src = _write(
            tmp_path,
            {
                "family": "Gamma5-N3",
                "matrix": {"rows": [["2", "0", "0"], ["0", "1", "1"], ["0", "0", "1"]]},
            },
        )
        code, doc = _run(["case-validate", src], tmp_path)
        assert code == 0
        assert doc["valid"] is True
        assert doc["parameters"]["p"] == 2

    def test_case_validate_failure_lists_diagnostics(self, tmp_path):
        src = _write(
            tmp_path,
            {
                "family": "Gamma5-N3",
                "matrix": {"rows": [["1", "0", "0"], ["0", "1", "1"], ["0", "0", "1"]]},
            },
        )
        code, doc = _run(["case-validate", src], tmp_path)
        assert code == 2
        assert doc["valid"] is False
        assert doc["diagnostics"]


class TestVerifyWitness:
    def test_verify_gamma1_extension(self, tmp_path):
        doc = {
            "generators": [
                {"rows": [["1", "1", "0"], ["0", "1", "0"], ["0", "0", "1"]]},
                {"rows": [["1", "0", "1"], ["0", "1", "0"], ["0", "0", "1"]]},
                {"rows": [["2", "0", "0"], ["0", "1", "3/2"], ["0", "0", "1"]]},
            ]
        }
        code, out = _run(["verify", _write(tmp_path, doc)], tmp_path)
        assert code == 0
        assert out["ranks"] == [2, 0, 1, 0]
        assert out["checks"]["rank_bound"] is True
        assert out["checks"]["core_normal"] is True

    def test_witness_converging(self, tmp_path):
        doc = {
            "gamma": {"rows": [["1", "0", "0"], ["0", "1/2", "0"], ["0", "0", "2"]]},
            "h": {"rows": [["1", "0", "0"], ["0", "1", "1"], ["0", "0", "1"]]},
        }
        code, out = _run(["witness", _write(tmp_path, doc)], tmp_path)
        assert code == 0
        assert out["verdict"] == "converging"
        assert out["min_gap"] < 1e-6


class TestRoundTripAndDeterminism:
    def test_output_bytes_deterministic(self, tmp_path):
        src = _write(tmp_path, jsonio.matrix_to_json(core(1, 0)))
        out1 = tmp_path / "a.json"
        out2 = tmp_path / "b.json"
        cli.run(["classify", src, "--out", str(out1)])
        cli.run(["classify", src, "--out", str(out2)])
        assert out1.read_bytes() == out2.read_bytes()

    def test_matrix_roundtrip_through_cli_doc(self):
        doc = jsonio.matrix_to_json(core(2, -3))
        assert jsonio.matrix_to_json(jsonio.matrix_from_json(doc)) == doc


class TestFixtureCorpus:
    @pytest.mark.parametrize(
        "label",
        [p.stem.split("_")[1] for p in sorted(FIXTURES.glob("case_*.json"))
         if not p.name.endswith(".expected.json")],
    )
    def test_golden_outputs(self, label, tmp_path):
        src = FIXTURES / f"case_{label}.json"
        expected = (FIXTURES / f"case_{label}.expected.json").read_text()
        out = tmp_path / "out.json"
        code = cli.run(["case-check", str(src), "--out", str(out)])
        assert code == 0
        assert out.read_text() == expected
