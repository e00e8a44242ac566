import json
import math

import pytest

from belltest import (
    DuplicateRespondent,
    FormatError,
    ProtocolDesign,
    QuantumUnpolarized,
    QuestionTriple,
    check_symmetry,
    estimate_frequencies,
    run_protocol,
    violation_test,
)
from belltest.cli import main
from belltest.dataio import (
    CSV_HEADER,
    ReportContext,
    emit_report,
    format_dataset,
    parse_dataset,
)
from belltest.protocol import DesignVariant

WITNESS_ARGS = f"0,{2 * math.pi / 3},{math.pi / 3}"

VALID_CSV = (
    CSV_HEADER + "\n"
    "r0,BA,b,+1,a,+1\n"
    "r1,BA,b,-1,a,-1\n"
)


class TestParseDataset:
    def test_two_valid_rows(self):
        data = parse_dataset(VALID_CSV)
        assert len(data) == 2
        assert data.records[0].respondent_id == "r0"

    def test_rejects_wrong_header(self):
        with pytest.raises(FormatError) as excinfo:
            parse_dataset("id,branch\nr0,BA\n")
        assert excinfo.value.line == 1

    def test_rejects_unsigned_answer_token(self):
        bad = CSV_HEADER + "\nr0,BA,b,1,a,+1\n"
        with pytest.raises(FormatError) as excinfo:
            parse_dataset(bad)
        assert excinfo.value.line == 2

    def test_rejects_wrong_field_count(self):
        bad = CSV_HEADER + "\nr0,BA,b,+1,a\n"
        with pytest.raises(FormatError):
            parse_dataset(bad)

    def test_rejects_unknown_branch(self):
        bad = CSV_HEADER + "\nr0,XX,b,+1,a,+1\n"
        with pytest.raises(FormatError):
            parse_dataset(bad)

    def test_rejects_duplicate_respondent(self):
        bad = CSV_HEADER + "\nr0,BA,b,+1,a,+1\nr0,BA,b,+1,a,-1\n"
        with pytest.raises(DuplicateRespondent) as excinfo:
            parse_dataset(bad)
        assert excinfo.value.line == 3

    def test_round_trip_is_lossless(self):
        design = ProtocolDesign(DesignVariant.TWO_ENSEMBLE, 1000)
        pop = QuantumUnpolarized(QuestionTriple.from_floats(0.0, 2.1, 1.0))
        data = run_protocol(pop, design, seed=13)
        text = format_dataset(data)
        assert format_dataset(parse_dataset(text)) == text


class TestEmitReport:
    def make_report(self, seed=21, alpha=0.05):
        design = ProtocolDesign(DesignVariant.THREE_ENSEMBLE, 3000)
        pop = QuantumUnpolarized(
            QuestionTriple.from_floats(0.0, 2 * math.pi / 3, math.pi / 3)
        )
        data = run_protocol(pop, design, seed=seed)
        table = estimate_frequencies(data)
        test = violation_test(table, alpha=alpha)
        symmetry = check_symmetry(data, tolerance=0.05)
        context = ReportContext(seed=seed, design="three", alpha=alpha)
        return emit_report(test, table, context, symmetry)

    def test_schema_and_verdict(self):
        report = json.loads(self.make_report())
        assert list(report) == [
            "nu", "margin", "standard_error", "z", "p_value", "alpha",
            "verdict", "symmetry_check", "seed", "design",
        ]
        assert report["verdict"] == "quantum-like-violation"
        assert report["seed"] == 21
        assert report["symmetry_check"]["passed"] is True
        nu = report["nu"]["a_given_b_plus"]
        assert nu["numerator"] <= nu["denominator"]
        assert 0.0 <= nu["wilson_interval"][0] <= nu["wilson_interval"][1] <= 1.0

    def test_identical_inputs_identical_bytes(self):
        assert self.make_report() == self.make_report()


class TestCli:
    def simulate(self, tmp_path, *extra):
        out = tmp_path / "data.csv"
        code = main([
            "simulate", "--model", "quantum", "--angles", WITNESS_ARGS,
            "--design", "three", "--n", "2000", "--seed", "17",
            "--out", str(out), *extra,
        ])
        assert code == 0
        return out

    def test_simulate_then_test_quantum(self, tmp_path, capsys):
        out = self.simulate(tmp_path)
        report_path = tmp_path / "report.json"
        code = main(["test", str(out), "--alpha", "0.05",
                     "--seed", "17", "--report", str(report_path)])
        assert code == 0
        report = json.loads(report_path.read_text())
        assert report["verdict"] == "quantum-like-violation"
        assert report["design"] == "three"
        assert report["seed"] == 17

    def test_simulate_classical_symmetrized(self, tmp_path):
        out = tmp_path / "data.csv"
        code = main([
            "simulate", "--model", "classical",
            "--atoms", "0.3", "0.2", "0.1", "0.05", "0.05", "0.1", "0.1", "0.1",
            "--symmetrize", "--design", "two", "--n", "3000",
            "--seed", "23", "--out", str(out),
        ])
        assert code == 0
        report_path = tmp_path / "report.json"
        assert main(["test", str(out), "--report", str(report_path)]) == 0
        assert json.loads(report_path.read_text())["verdict"] == "classical-consistent"

    def test_degenerate_dataset_exits_3(self, tmp_path):
        out = tmp_path / "data.csv"
        code = main([
            "simulate", "--model", "classical",
            "--atoms", "1", "0", "0", "0", "0", "0", "0", "0",
            "--symmetrize", "--design", "three", "--n", "500",
            "--seed", "5", "--out", str(out),
        ])
        assert code == 0
        report_path = tmp_path / "report.json"
        code = main(["test", str(out), "--report", str(report_path)])
        assert code == 3
        assert json.loads(report_path.read_text())["verdict"] == "inconclusive-degenerate"

    def test_invalid_atoms_exit_2(self, tmp_path):
        code = main([
            "simulate", "--model", "classical",
            "--atoms", "1", "1", "1", "0", "0", "0", "0", "-3",
            "--design", "three", "--n", "10", "--seed", "0",
            "--out", str(tmp_path / "x.csv"),
        ])
        assert code == 2

    def test_missing_model_parameters_exit_2(self, tmp_path):
        code = main([
            "simulate", "--model", "quantum", "--design", "three",
            "--n", "10", "--seed", "0", "--out", str(tmp_path / "x.csv"),
        ])
        assert code == 2

    def test_malformed_dataset_exit_2(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text(CSV_HEADER + "\nr0,BA,b,1,a,+1\n")
        assert main(["test", str(bad)]) == 2

    def test_search_command(self, capsys):
        assert main(["search", "--grid", "90", "--refine-tol", "1e-6",
                     "--floor-samples", "500"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["best_margin"] == pytest.approx(-0.25, abs=1e-5)
        assert payload["classical_floor"]["min_margin"] >= -1e-12

    def test_interference_command(self, capsys):
        assert main(["interference", "--p", "0.75", "--p1", "0.25",
                     "--p2", "0.25"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["coefficient"] == pytest.approx(0.5, abs=1e-12)
        assert payload["regime"] == "Trigonometric"

    def test_interference_degenerate_exit_3(self):
        assert main(["interference", "--p", "0.5", "--p1", "0", "--p2", "0.5"]) == 3

    def test_workers_flag_keeps_bytes_identical(self, tmp_path):
        outputs = []
        for workers in ("1", "4", "8"):
            out = self.simulate(tmp_path, "--workers", workers)
            outputs.append(out.read_bytes())
            out.unlink()
        assert outputs[0] == outputs[1] == outputs[2]
