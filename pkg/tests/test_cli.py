import json
from fractions import Fraction

import pytest

from quadcount.cli import main
from quadcount.fileio import (
    points_from_csv,
    points_to_csv,
    sets_from_csv,
    sets_to_csv,
)
from quadcount.geometry import PointSet3


SETS_CSV = """\
# additive witness, n = 3
A: 1,2,3
B: 1,2,3
C: 1,2,3
D: -9,-8,-7,-6,-5,-4,-3
"""


class TestFileFormats:
    def test_sets_round_trip(self):
        sets = sets_from_csv(SETS_CSV)
        assert sets.sizes == (3, 3, 3, 7)
        again = sets_from_csv(sets_to_csv(sets))
        assert again == sets

    def test_sets_accept_rationals_and_decimals(self):
        sets = sets_from_csv("A: 1/2,0.25\nB: 1\nC: 2\nD: 3e-1\n")
        assert sets.sets[0] == (Fraction(1, 2), Fraction(1, 4))
        assert sets.sets[3] == (Fraction(3, 10),)

    def test_sets_missing_label(self):
        with pytest.raises(ValueError, match="missing sets"):
            sets_from_csv("A: 1\nB: 2\nC: 3\n")

    def test_exact_points_round_trip(self):
        text = "1/2,2,9/4\n1,1,1\n"
        points = points_from_csv(text)
        assert isinstance(points, PointSet3)
        assert points.kind == "exact"
        assert points_from_csv(points_to_csv(points)) == points

    def test_float_points_detected_and_round_trip(self):
        text = "0.5,2.0,2.25\n1.0,1.0,1.0\n"
        points = points_from_csv(text)
        assert points.kind == "float"
        assert points_from_csv(points_to_csv(points)) == points

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            points_from_csv("1,2\n1,2,3\n")


@pytest.fixture()
def sets_file(tmp_path):
    path = tmp_path / "sets.csv"
    path.write_text(SETS_CSV)
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCountZerosCommand:
    def test_fiber_json(self, capsys, sets_file):
        code, out, _ = run_cli(
            capsys, "count-zeros", "--poly", "x+y+s+t", "--sets", sets_file,
            "--method", "fiber",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 27
        assert payload["method"] == "fiber"

    def test_naive_matches(self, capsys, sets_file):
        code, out, _ = run_cli(
            capsys, "count-zeros", "--poly", "x+y+s+t", "--sets", sets_file,
            "--method", "naive",
        )
        assert json.loads(out)["count"] == 27

    def test_poly_from_file(self, capsys, sets_file, tmp_path):
        poly_path = tmp_path / "poly.txt"
        poly_path.write_text("x + y + s + t\n")
        code, out, _ = run_cli(
            capsys, "count-zeros", "--poly", str(poly_path), "--sets", sets_file,
        )
        assert code == 0
        assert json.loads(out)["count"] == 27

    def test_parse_error_is_domain_error(self, capsys, sets_file):
        code, _, err = run_cli(
            capsys, "count-zeros", "--poly", "x + q", "--sets", sets_file,
        )
        assert code == 1
        assert err.startswith("error:parse:")

    def test_unknown_flag_is_usage_error(self, sets_file):
        with pytest.raises(SystemExit) as exc:
            main(["count-zeros", "--poly", "x", "--sets", sets_file, "--bogus"])
        assert exc.value.code == 2

    def test_threads_flag(self, capsys, sets_file):
        code, out, _ = run_cli(
            capsys, "count-zeros", "--poly", "x+y+s+t", "--sets", sets_file,
            "--threads", "3",
        )
        assert json.loads(out)["count"] == 27


class TestDetectSpecialCommand:
    def test_non_special_verdict(self, capsys):
        code, out, _ = run_cli(capsys, "detect-special", "--poly", "t - (x + y*s)")
        assert code == 0
        payload = json.loads(out)
        assert payload["classification"] == "non-special"
        assert payload["ratio_spreads"]["h1"] > 1e-2
        assert payload["seed"] == 1729

    def test_special_verdict_with_trials_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "detect-special", "--poly", "x+y+s+t", "--trials", "10",
        )
        assert json.loads(out)["classification"] == "special"


class TestConstructCommand:
    def test_ap_additive_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, "construct", "--kind", "ap-additive", "--n", "3", "--out", "csv",
        )
        assert code == 0
        assert "# poly: x + y + s + t" in out
        sets = sets_from_csv(out)
        assert sets.sizes == (3, 3, 3, 7)

    def test_elliptic_points_csv_round_trip(self, capsys):
        code, out, _ = run_cli(
            capsys, "construct", "--kind", "elliptic", "--n", "6", "--out", "csv",
        )
        assert code == 0
        points = points_from_csv(out)
        assert points.kind == "float"
        assert len(points) == 5

    def test_moment_exact_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, "construct", "--kind", "moment", "--n", "4",
            "--spacing", "1/2", "--out", "csv",
        )
        points = points_from_csv(out)
        assert points.kind == "exact"
        assert points.points[0] == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))

    def test_singular_curve_is_domain_error(self, capsys):
        code, _, err = run_cli(
            capsys, "construct", "--kind", "elliptic", "--n", "4",
            "--a", "-3", "--b", "2",
        )
        assert code == 1
        assert err.startswith("error:construct:")


class TestGeometryCommands:
    def test_count_coplanar(self, capsys, tmp_path):
        path = tmp_path / "pts.csv"
        path.write_text("0,0,0\n1,0,0\n0,1,0\n1,1,0\n0,0,1\n")
        code, out, _ = run_cli(capsys, "count-coplanar", "--points", str(path))
        payload = json.loads(out)
        assert (payload["count"], payload["method"]) == (1, "fast")

    def test_count_coplanar_float_naive(self, capsys, tmp_path):
        path = tmp_path / "pts.csv"
        path.write_text("0.0,0.0,0.0\n1.0,0.0,0.0\n0.25,1.0,0.0\n1.0,1.5,0.0\n0.0,0.25,1.0\n")
        code, out, _ = run_cli(capsys, "count-coplanar", "--points", str(path))
        payload = json.loads(out)
        assert payload["method"] == "naive"
        assert payload["count"] == 1

    def test_float_fast_is_domain_error(self, capsys, tmp_path):
        path = tmp_path / "pts.csv"
        path.write_text("0.5,0.0,0.0\n1.0,0.0,0.0\n0.0,1.0,0.0\n1.0,1.0,1.0\n")
        code, _, err = run_cli(
            capsys, "count-coplanar", "--points", str(path), "--method", "fast",
        )
        assert code == 1
        assert err.startswith("error:count:")

    def test_count_collinear(self, capsys, tmp_path):
        path = tmp_path / "pts.csv"
        path.write_text("0,0\n1,1\n2,2\n5,0\n")
        code, out, _ = run_cli(capsys, "count-collinear", "--points", str(path))
        assert json.loads(out)["count"] == 1

    def test_count_circles(self, capsys, tmp_path):
        path = tmp_path / "pts.csv"
        path.write_text("1,0\n0,1\n-1,0\n0,-1\n3/5,4/5\n")
        code, out, _ = run_cli(capsys, "count-circles", "--points", str(path))
        payload = json.loads(out)
        assert (payload["circles"], payload["count"]) == (1, 5)


class TestFitExponentCommand:
    def test_ap_additive_csv_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "fit-exponent", "--experiment", "ap-additive-zeros",
            "--ns", "4,8,16", "--out", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,count,elapsed_ms"
        assert lines[1].startswith("4,64,")
        assert lines[-1].startswith("slope,3.0000")

    def test_json_output_round_trips(self, capsys):
        code, out, _ = run_cli(
            capsys, "fit-exponent", "--experiment", "ap-additive-zeros",
            "--ns", "4,8,16", "--out", "json",
        )
        payload = json.loads(out)
        assert payload["slope"] == pytest.approx(3.0, abs=1e-12)
        assert [row[1] for row in payload["rows"]] == [64, 512, 4096]


class TestConfigFile:
    def test_config_supplies_defaults_and_flags_override(self, capsys, tmp_path, sets_file):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("method=naive\nseed=7\n")
        code, out, _ = run_cli(
            capsys, "count-zeros", "--poly", "x+y+s+t", "--sets", sets_file,
            "--config", str(cfg),
        )
        assert json.loads(out)["method"] == "naive"
        code, out, _ = run_cli(
            capsys, "count-zeros", "--poly", "x+y+s+t", "--sets", sets_file,
            "--config", str(cfg), "--method", "fiber",
        )
        assert json.loads(out)["method"] == "fiber"

    def test_out_path_writes_file(self, capsys, tmp_path, sets_file):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys, "count-zeros", "--poly", "x+y+s+t", "--sets", sets_file,
            "--out-path", str(target),
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["count"] == 27
