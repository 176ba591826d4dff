import math

from sectornet.cli import main
from sectornet.fileio import read_orientation, read_points, write_points
from sectornet.geometry import Point
from sectornet.orient180 import RADIUS_180


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestOrientCommand:
    def test_two_point_file_alpha_180(self, tmp_path, capsys):
        src = tmp_path / "pts.txt"
        out = tmp_path / "orient.txt"
        write_points(src, [Point(0, 0, 0), Point(1, 1, 0)])
        code, stdout, _ = run(capsys, "orient", "--input", str(src), "--alpha", "180", "--out", str(out))
        assert code == 0
        assert f"guaranteed_radius {RADIUS_180!r}" in stdout
        assert "achieved_min_strong_radius 1.0" in stdout
        a = read_orientation(out)
        assert set(a.theta) == {0, 1}
        assert a.alpha == math.pi

    def test_disconnected_exits_3(self, tmp_path, capsys):
        src = tmp_path / "pts.txt"
        write_points(src, [Point(0, 0, 0), Point(1, 3, 0)])
        code, _, err = run(capsys, "orient", "--input", str(src), "--alpha", "180", "--out", str(tmp_path / "o.txt"))
        assert code == 3
        assert "connected" in err

    def test_parse_error_exits_2(self, tmp_path, capsys):
        src = tmp_path / "pts.txt"
        src.write_text("0 zero 0\n")
        code, _, _ = run(capsys, "orient", "--input", str(src), "--alpha", "90", "--out", str(tmp_path / "o.txt"))
        assert code == 2

    def test_fifty_points_alpha_90(self, tmp_path, capsys):
        code, stdout, _ = run(capsys, "witness", "--kind", "collinear", "--param", "2", "--out", str(tmp_path / "x.txt"))
        assert code == 0
        src = tmp_path / "pts.txt"
        from sectornet.instances import random_connected_udg

        write_points(src, random_connected_udg(50, 12, 7.0))
        out = tmp_path / "orient.txt"
        code, stdout, _ = run(capsys, "orient", "--input", str(src), "--alpha", "90", "--out", str(out))
        assert code == 0
        assert "guaranteed_radius 7.0" in stdout


class TestVerifyCommand:
    def test_strong_pair(self, tmp_path, capsys):
        src = tmp_path / "pts.txt"
        orient = tmp_path / "orient.txt"
        write_points(src, [Point(0, 0, 0), Point(1, 1, 0)])
        orient.write_text("alpha 1.5707963267948966\nradius 1.0\n0 0.0\n1 3.141592653589793\n")
        code, stdout, _ = run(capsys, "verify", "--input", str(src), "--orientation", str(orient))
        assert code == 0 and "STRONG sccs=1" in stdout

    def test_facing_away_not_strong(self, tmp_path, capsys):
        src = tmp_path / "pts.txt"
        orient = tmp_path / "orient.txt"
        write_points(src, [Point(0, 0, 0), Point(1, 1, 0)])
        orient.write_text("alpha 1.5707963267948966\nradius 5.0\n0 3.141592653589793\n1 0.0\n")
        code, stdout, _ = run(capsys, "verify", "--input", str(src), "--orientation", str(orient))
        assert code == 1 and "NOT-STRONG sccs=2" in stdout

    def test_mismatched_ids_exit_2(self, tmp_path, capsys):
        src = tmp_path / "pts.txt"
        orient = tmp_path / "orient.txt"
        write_points(src, [Point(0, 0, 0), Point(1, 1, 0)])
        orient.write_text("alpha 3.14\nradius 1.0\n0 0.0\n")
        code, _, _ = run(capsys, "verify", "--input", str(src), "--orientation", str(orient))
        assert code == 2


class TestWitnessCommand:
    def test_collinear_four(self, tmp_path, capsys):
        out = tmp_path / "w.txt"
        code, _, _ = run(capsys, "witness", "--kind", "collinear", "--param", "4", "--out", str(out))
        assert code == 0
        assert len(read_points(out)) == 4

    def test_tripod_prints_check(self, tmp_path, capsys):
        out = tmp_path / "w.txt"
        code, stdout, _ = run(capsys, "witness", "--kind", "tripod180", "--param", "2", "--out", str(out))
        assert code == 0
        assert "witness_check PASS" in stdout
        assert len(read_points(out)) == 10

    def test_invalid_param_exit_2(self, tmp_path, capsys):
        code, _, _ = run(capsys, "witness", "--kind", "collinear", "--param", "1", "--out", str(tmp_path / "w.txt"))
        assert code == 2


class TestPlotCommand:
    def test_svg_well_formed(self, tmp_path, capsys):
        import xml.etree.ElementTree as ET

        src = tmp_path / "pts.txt"
        orient = tmp_path / "orient.txt"
        svg = tmp_path / "fig.svg"
        write_points(src, [Point(0, 0, 0), Point(1, 1, 0), Point(2, 0.5, 0.8)])
        code, _, _ = run(capsys, "orient", "--input", str(src), "--alpha", "90", "--out", str(orient))
        assert code == 0
        code, _, _ = run(capsys, "plot", "--input", str(src), "--orientation", str(orient), "--out", str(svg))
        assert code == 0
        root = ET.parse(svg).getroot()
        assert root.tag.endswith("svg")
        sectors = [e for e in root.iter() if e.tag.endswith("path") and "d" in e.attrib]
        assert len(sectors) >= 3  # one wedge per point (marker path extra)

    def test_points_only_mode(self, tmp_path, capsys):
        src = tmp_path / "pts.txt"
        svg = tmp_path / "fig.svg"
        write_points(src, [Point(0, 0, 0), Point(1, 1, 0)])
        code, _, _ = run(capsys, "plot", "--input", str(src), "--out", str(svg))
        assert code == 0
        text = svg.read_text()
        assert "<circle" in text and "fill-opacity" not in text


class TestExperimentCommand:
    def test_small_run_passes(self, tmp_path, capsys):
        code, stdout, _ = run(capsys, "experiment", "--alpha", "180", "--n", "10", "--trials", "4", "--seed", "3")
        assert code == 0
        assert "passed 4/4" in stdout

    def test_zero_trials(self, capsys):
        code, stdout, _ = run(capsys, "experiment", "--alpha", "90", "--n", "10", "--trials", "0", "--seed", "0")
        assert code == 0
        assert "passed 0/0" in stdout


class TestDeterminism:
    def test_outputs_byte_identical(self, tmp_path, capsys):
        from sectornet.instances import random_connected_udg

        src = tmp_path / "pts.txt"
        write_points(src, random_connected_udg(20, 5, 4.0))
        outs = []
        for tag in ("a", "b"):
            orient = tmp_path / f"orient_{tag}.txt"
            svg = tmp_path / f"fig_{tag}.svg"
            wfile = tmp_path / f"wit_{tag}.txt"
            code1, out1, _ = run(capsys, "orient", "--input", str(src), "--alpha", "180", "--out", str(orient))
            code2, out2, _ = run(capsys, "plot", "--input", str(src), "--orientation", str(orient), "--out", str(svg))
            code3, out3, _ = run(capsys, "witness", "--kind", "tripod180", "--param", "2", "--out", str(wfile))
            code4, out4, _ = run(capsys, "experiment", "--alpha", "180", "--n", "8", "--trials", "3", "--seed", "1")
            assert (code1, code2, code3, code4) == (0, 0, 0, 0)
            outs.append(
                (orient.read_bytes(), svg.read_bytes(), wfile.read_bytes(), out1 + out2 + out3 + out4)
            )
        assert outs[0] == outs[1]
