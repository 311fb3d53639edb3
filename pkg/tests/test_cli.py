import json
import math

import pytest

from optishape import cli
from optishape.problems import InfeasibleError


def run_cli(capsys, *args):
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""
    try:
        code = cli.main(list(args))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


class TestSolve:
    def test_fence_golden_values(self, capsys):
        code, out, _ = run_cli(
            capsys, "solve", "fence", "--fence", "2400",
            "--v-segments", "4", "--h-segments", "2",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["problem"] == "fence"
        assert doc["solution"]["x"] == 300
        assert doc["solution"]["y"] == 600
        assert doc["method"] == "closed_form"
        assert doc["residuals"]["half_split_deficit"] <= 1e-9

    def test_can_golden_values(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "can", "--volume", "1000", "--base", "circle")
        assert code == 0
        doc = json.loads(out)
        assert doc["solution"]["r"] == pytest.approx(5.4192607, abs=1e-6)
        assert doc["solution"]["h"] == pytest.approx(10.8385214, abs=1e-6)
        assert doc["inputs"]["base"] == "circle"

    def test_can_polygon_base(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "can", "--volume", "2", "--base", "4")
        assert code == 0
        doc = json.loads(out)
        assert doc["inputs"]["base"] == 4
        assert doc["solution"]["r"] == pytest.approx(0.6299605249474366, rel=1e-9)

    def test_can_dual(self, capsys):
        code, out, _ = run_cli(
            capsys, "solve", "can-dual", "--surface-area", "24", "--base", "4"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["solution"]["volume"] == pytest.approx(8.0, rel=1e-9)

    def test_rectangle_uses_fence_flag_for_perimeter(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "rectangle", "--fence", "40")
        assert code == 0
        doc = json.loads(out)
        assert doc["inputs"]["perimeter"] == 40
        assert doc["solution"]["x"] == 10
        assert doc["solution"]["area"] == 100

    def test_box(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "box", "--volume", "8")
        assert code == 0
        doc = json.loads(out)
        assert doc["solution"]["x"] == pytest.approx(2.0, rel=1e-12)
        assert doc["solution"]["surface_area"] == pytest.approx(24.0, rel=1e-12)

    def test_rect_semicircle(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "rect-semicircle", "--radius", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["solution"]["x"] == pytest.approx(math.sqrt(2) / 2, rel=1e-12)

    def test_ellipse_semicircle(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "ellipse-semicircle")
        assert code == 0
        doc = json.loads(out)
        assert doc["method"] == "golden_section"
        assert doc["solution"]["a"] == pytest.approx(0.8164966, abs=1e-6)
        assert doc["solution"]["b"] == pytest.approx(0.4714045, abs=1e-6)
        contacts = doc["solution"]["contacts"]
        assert len(contacts) == 2
        assert contacts[1]["x"] == pytest.approx(0.7071068, abs=1e-6)
        assert all(v <= 1e-6 for v in doc["residuals"].values())

    def test_text_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "solve", "fence", "--fence", "2400",
            "--v-segments", "4", "--h-segments", "2", "--format", "text",
        )
        assert code == 0
        assert "solution.x = 300" in out
        assert "problem = fence" in out


class TestJsonContract:
    @pytest.mark.parametrize(
        "argv",
        [
            ("solve", "fence", "--fence", "2400"),
            ("solve", "can", "--volume", "1000"),
            ("solve", "ellipse-semicircle"),
            ("verify", "--suite", "equivalence"),
        ],
    )
    def test_round_trip_is_byte_identical(self, capsys, argv):
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0
        doc = json.loads(out)
        assert cli.dumps(doc) + "\n" == out

    def test_seventeen_significant_digits(self):
        assert cli.format_number(math.pi) == "3.1415926535897931"
        assert cli.format_number(300.0) == "300"
        assert cli.format_number(-0.0) == "0"
        assert float(cli.format_number(0.1 + 0.2)) == 0.1 + 0.2


class TestCurve:
    def test_three_point_curve_bytes(self, capsys):
        code, out, _ = run_cli(
            capsys, "curve", "fence", "--fence", "2400",
            "--v-segments", "4", "--h-segments", "2", "--points", "3",
        )
        assert code == 0
        assert out == "L,area\n0,0\n1200,180000\n2400,0\n"

    def test_five_point_curve_has_quarter_row(self, capsys):
        code, out, _ = run_cli(
            capsys, "curve", "fence", "--fence", "2400", "--points", "5",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "L,area"
        assert lines[1] == "0,0"
        assert lines[2] == "600,135000"
        assert lines[-1] == "2400,0"

    def test_endpoints_always_zero(self, capsys):
        code, out, _ = run_cli(capsys, "curve", "fence", "--fence", "977.5", "--points", "11")
        assert code == 0
        rows = out.splitlines()[1:]
        assert rows[0].endswith(",0")
        assert rows[-1].endswith(",0")

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "curve.csv"
        code, out, _ = run_cli(
            capsys, "curve", "fence", "--fence", "2400", "--points", "3",
            "--out", str(target),
        )
        assert code == 0
        assert out == ""
        assert target.read_text() == "L,area\n0,0\n1200,180000\n2400,0\n"

    def test_unwritable_path_exits_4(self, capsys):
        code, _, err = run_cli(
            capsys, "curve", "fence", "--fence", "2400",
            "--out", "/nonexistent-dir/curve.csv",
        )
        assert code == 4
        assert "cannot write" in err


class TestVerifyCommand:
    def test_single_suite_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "h2r", "--format", "text")
        assert code == 0
        assert "[PASS] h2r: h_equals_2r_numeric" in out
        assert "0 failed" in out

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "equivalence")
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] is True
        assert all(check["passed"] for check in doc["checks"])

    def test_unknown_suite_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--suite", "bogus")
        assert code == 2


class TestExitCodes:
    def test_missing_required_flag(self, capsys):
        code, _, _ = run_cli(capsys, "solve", "can")
        assert code == 2

    def test_nonpositive_value(self, capsys):
        code, _, _ = run_cli(capsys, "solve", "can", "--volume", "-5")
        assert code == 2

    def test_bad_base(self, capsys):
        code, _, _ = run_cli(capsys, "solve", "can", "--volume", "1", "--base", "2")
        assert code == 2

    def test_too_few_curve_points(self, capsys):
        code, _, err = run_cli(capsys, "curve", "fence", "--fence", "10", "--points", "1")
        assert code == 2
        assert "error" in err

    def test_infeasible_maps_to_3(self, capsys, monkeypatch):
        def raiser(radius=1.0):
            raise InfeasibleError("no ellipse fits")
        monkeypatch.setattr("optishape.problems.solve_ellipse_semicircle", raiser)
        code, out, _ = run_cli(capsys, "solve", "ellipse-semicircle")
        assert code == 3
        assert "diagnostic" in json.loads(out)
