# tests/test_cli.py: the bunch command line, driven through main(argv)
import sys, os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import argparse
import json
import math

import pytest

from bunchkit.cli import main, parse_amplitude, parse_angle, parse_beta
from bunchkit.report import RunReport, jsonable


def _run(capsys, *argv):
    # Returns (exit code, parsed RunReport or None)
    code = main([*argv, "--json"])
    out = capsys.readouterr().out
    report = RunReport.from_json(out) if out.strip() else None
    return code, report


class TestParsers:
    @pytest.mark.parametrize(
        "text, expected",
        [("pi/4", math.pi / 4), ("3pi/8", 3 * math.pi / 8), ("3*pi/8", 3 * math.pi / 8),
         ("-pi/2", -math.pi / 2), ("pi", math.pi), ("0.5", 0.5), ("PI/4", math.pi / 4)],
    )
    def test_angles(self, text, expected):
        assert parse_angle(text) == pytest.approx(expected)

    @pytest.mark.parametrize("text", ["quarter", "pi/", "nan", "inf"])
    def test_bad_angles(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_angle(text)

    def test_amplitudes(self):
        assert parse_amplitude("0.5,-1") == complex(0.5, -1.0)
        assert parse_amplitude("2") == complex(2.0, 0.0)

    @pytest.mark.parametrize("text", ["1,2,3", "a,b", "nan,0", ""])
    def test_bad_amplitudes(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_amplitude(text)

    def test_beta_fraction(self):
        assert parse_beta("5/3") == pytest.approx(5 / 3)
        with pytest.raises(argparse.ArgumentTypeError):
            parse_beta("5/0")


class TestBetaCommand:
    def test_orthogonal(self, capsys):
        code, report = _run(capsys, "beta", "--chi", "1,0", "0,0", "--rho", "0,0", "1,0")
        assert code == 0
        assert report.command == "beta"
        assert report.outputs["beta"] == 2.0
        assert report.outputs["n_b"] == 1.0

    def test_typed_decimals_are_warning_free(self, capsys):
        code, report = _run(capsys, "beta", "--chi", "1,0", "0,0", "--rho", "0.4472,0", "0.8944,0")
        assert code == 0
        assert report.outputs["beta"] == pytest.approx(5 / 3, abs=1e-3)
        assert report.warnings == []

    def test_literal_value_is_auto_normalized(self, capsys):
        code, report = _run(capsys, "beta", "--chi", "1,0", "0,0", "--rho", "0.4472,0", "1.7889,0")
        assert code == 0
        assert report.outputs["was_normalized"] is True
        assert any("was_normalized" in w for w in report.warnings)
        assert report.outputs["beta"] == pytest.approx(17 / 9, abs=1e-3)

    def test_no_normalize_rejects(self, capsys):
        code, report = _run(capsys, "beta", "--chi", "1,0", "0,0", "--rho", "0.4472,0", "1.7889,0", "--no-normalize")
        assert code == 2
        assert report.outputs["error_type"] == "NormalizationError"

    def test_malformed_amplitude(self, capsys):
        assert main(["beta", "--chi", "one", "0,0", "--rho", "0,0", "1,0"]) == 2
        assert "amplitude" in capsys.readouterr().err

    def test_mode_count_mismatch(self, capsys):
        code, _ = _run(capsys, "beta", "--chi", "1,0", "0,0", "--rho", "1,0")
        assert code == 2

    def test_plain_output(self, capsys):
        assert main(["beta", "--chi", "1,0", "0,0", "--rho", "0,0", "1,0"]) == 0
        out = capsys.readouterr().out
        assert "beta: 2" in out
        assert "overlap_sq: 0" in out


class TestHomCommand:
    def test_standard_inputs(self, capsys):
        code, report = _run(capsys, "hom", "--chi", "1,0", "0,0", "--rho", "0,0", "1,0")
        assert code == 0
        tables = report.outputs["distributions"]
        assert tables["indistinguishable"]["q1q2"] == pytest.approx(0.0, abs=1e-15)
        assert tables["distinguishable"]["q1q2"] == pytest.approx(0.5)

    def test_worked_example_scenario(self, capsys):
        code, report = _run(capsys, "hom", "--scenario", "worked-example")
        assert code == 0
        assert report.inputs["scenario"] == "worked-example"
        assert report.outputs["dip"]["p_11"] == pytest.approx(1 / 6)

    def test_identical_inputs(self, capsys):
        code, report = _run(capsys, "hom", "--scenario", "same-leg")
        tables = report.outputs["distributions"]
        for key, p in tables["indistinguishable"].items():
            assert p == pytest.approx(tables["distinguishable"][key], abs=1e-15)

    def test_needs_inputs(self, capsys):
        code, report = _run(capsys, "hom")
        assert code == 2
        assert report.outputs["error_type"] == "InvalidParameterError"

    def test_unknown_scenario_is_a_usage_error(self, capsys):
        assert main(["hom", "--scenario", "nope"]) == 2


class TestInterfCommand:
    def test_all_symmetric(self, capsys):
        code, report = _run(capsys, "interf")
        assert code == 0
        assert report.outputs["beta"] == pytest.approx(1.0, abs=1e-12)
        assert report.outputs["p_indist"] == pytest.approx(0.5)
        assert report.outputs["p_dist"] == pytest.approx(0.25)

    def test_corner(self, capsys):
        code, report = _run(capsys, "interf", "--theta-c", "0", "--theta-d", "pi/2", "--oracle", "--hom")
        assert code == 0
        assert report.outputs["beta"] == pytest.approx(2.0, abs=1e-12)
        assert report.outputs["oracle_beta"] == pytest.approx(2.0, abs=1e-10)
        assert report.outputs["dip"]["p_11"] == pytest.approx(0.0, abs=1e-12)

    def test_degenerate_exits_3(self, capsys):
        code, report = _run(capsys, "interf", "--theta-a", "0", "--theta-c", "0")
        assert code == 3
        assert report.outputs["error_type"] == "PostSelectionError"

    def test_degenerate_plain_message(self, capsys):
        assert main(["interf", "--theta-a", "0", "--theta-c", "0"]) == 3
        assert "Post-Selection Impossible" in capsys.readouterr().err

    def test_bad_angle_exits_2(self):
        assert main(["interf", "--theta-c", "sideways"]) == 2


class TestSweepCommand:
    def test_full_grid_summary(self, capsys):
        code, report = _run(capsys, "sweep", "--grid", "201")
        assert code == 0
        assert report.outputs["coverage_fraction"] >= 0.8
        assert report.outputs["points"] == 201 * 201

    def test_grid_two_writes_four_rows(self, capsys, tmp_path):
        out = tmp_path / "sweep.csv"
        code, report = _run(capsys, "sweep", "--grid", "2", "--out", str(out))
        assert code == 0
        assert report.outputs["csv"] == str(out)
        assert len(out.read_text().splitlines()) == 1 + 4

    def test_repeat_runs_are_byte_identical(self, capsys, tmp_path):
        paths = [tmp_path / "one.csv", tmp_path / "two.csv"]
        for path in paths:
            assert main(["sweep", "--grid", "15", "--out", str(path)]) == 0
        capsys.readouterr()
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_svg(self, capsys, tmp_path):
        svg = tmp_path / "sweep.svg"
        code, report = _run(capsys, "sweep", "--grid", "9", "--svg", str(svg))
        assert code == 0
        assert "<svg" in svg.read_text()

    def test_grid_too_small(self, capsys):
        code, _ = _run(capsys, "sweep", "--grid", "1")
        assert code == 2


class TestDipCommand:
    def test_range(self, capsys):
        code, report = _run(capsys, "dip", "--range", "1", "2", "0.25")
        assert code == 0
        points = report.outputs["points"]
        assert [p["beta"] for p in points] == pytest.approx([1.0, 1.25, 1.5, 1.75, 2.0])
        assert [p["p_11"] for p in points] == pytest.approx([1 - p["beta"] / 2 for p in points])

    def test_worked_example(self, capsys):
        code, report = _run(capsys, "dip", "--beta", "5/3")
        assert report.outputs["points"][0]["p_11"] == pytest.approx(1 / 6)

    def test_out_of_range(self, capsys):
        code, report = _run(capsys, "dip", "--beta", "2.5")
        assert code == 2
        assert report.outputs["error_type"] == "InvalidParameterError"

    def test_csv(self, capsys, tmp_path):
        out = tmp_path / "dip.csv"
        assert main(["dip", "--range", "1", "2", "0.5", "--out", str(out)]) == 0
        capsys.readouterr()
        assert out.read_text().splitlines() == ["beta,p_11", "1,0.5", "1.5,0.25", "2,0"]

    def test_needs_values(self, capsys):
        code, _ = _run(capsys, "dip")
        assert code == 2

    @pytest.mark.parametrize(
        "bounds",
        [
            ("1", "2", "nan"),
            ("nan", "2", "0.5"),
            ("1", "inf", "0.5"),
            ("1", "2", "inf"),
            ("1", "2", "1e-12"),
            ("1", "2", "0"),
            ("2", "1", "0.5"),
        ],
    )
    def test_bad_range(self, capsys, bounds):
        code, report = _run(capsys, "dip", "--range", *bounds)
        assert code == 2
        assert report.outputs["error_type"] == "InvalidParameterError"


class TestSolveCommand:
    def test_full_bunching(self, capsys):
        code, report = _run(capsys, "solve", "2.0")
        assert code == 0
        assert report.outputs["theta_c"] == pytest.approx(0.0, abs=1e-12)

    def test_identical(self, capsys):
        _, report = _run(capsys, "solve", "1.0")
        assert report.outputs["theta_c"] == pytest.approx(math.pi / 4, abs=1e-12)

    @pytest.mark.parametrize("method", ["closed_form", "bisection"])
    def test_midpoint(self, capsys, method):
        _, report = _run(capsys, "solve", "1.5", "--method", method)
        assert report.outputs["theta_c"] == pytest.approx(0.30774, abs=1e-5)
        assert report.outputs["residual"] < 1e-10
        assert report.inputs["method"] == method

    def test_out_of_range(self, capsys):
        code, _ = _run(capsys, "solve", "3")
        assert code == 2


class TestMisc:
    def test_scenarios(self, capsys):
        code, report = _run(capsys, "scenarios")
        assert code == 0
        assert {s["id"] for s in report.outputs["scenarios"]} >= {"hom-orthogonal", "worked-example"}

    def test_no_command(self, capsys):
        assert main([]) == 0
        assert "usage" in capsys.readouterr().out.lower()

    def test_help(self, capsys):
        assert main(["--help"]) == 0

    def test_unknown_command(self, capsys):
        assert main(["teleport"]) == 2

    def test_report_round_trip(self):
        report = RunReport(command="beta", inputs=jsonable({"amp": 1 + 2j, "modes": ("q1", "q2")}))
        restored = RunReport.from_json(report.to_json())
        assert restored == report
        assert restored.inputs == {"amp": [1.0, 2.0], "modes": ["q1", "q2"]}
        assert json.loads(report.to_json())["warnings"] == []
