"""End-to-end command-line behavior: files, messages, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from tropreal import iojson
from tropreal.cli import main, parse_target
from tropreal.hyperfields import stv
from tropreal.polyhedra import point_polyhedron, union_of
from tropreal.scenarios import get_scenario


@pytest.fixture
def circle_files(tmp_path):
    poly = tmp_path / "circle.txt"
    poly.write_text("(x-2)^2 + (y-2)^2 - 1\n")
    desc = tmp_path / "circle.json"
    desc.write_text(
        iojson.dumps(iojson.description_to_json(get_scenario("circle").description))
    )
    return poly, desc


def test_parse_target():
    assert parse_target("((+,1),(+,0))") == (stv(1, 1), stv(1, 0))
    assert parse_target("((-,3/2),(0,inf))") == (stv(-1, "3/2"), stv(0, "inf"))
    with pytest.raises(Exception):
        parse_target("nonsense")


def test_trop_command(circle_files, tmp_path, capsys):
    poly, _ = circle_files
    out = tmp_path / "trop.json"
    assert main(["trop", str(poly), "--out", str(out)]) == 0
    captured = capsys.readouterr()
    assert "X^2 (+) Y^2 (+) -X (+) -Y (+) 1" in captured.out
    data = json.loads(out.read_text())
    assert data["nvars"] == 2 and len(data["terms"]) == 5


def test_region_command_and_svg(circle_files, tmp_path, capsys):
    poly, _ = circle_files
    trop = tmp_path / "trop.json"
    main(["trop", str(poly), "--out", str(trop)])
    region = tmp_path / "region.json"
    svg = tmp_path / "fig.svg"
    rc = main(
        [
            "region", str(trop), "--rel", "le", "--orthant", "all",
            "--out", str(region), "--svg", str(svg),
            "--window=-1.5,1.5,-1.5,1.5", "--grid", "24",
        ]
    )
    assert rc == 0
    data = json.loads(region.read_text())
    assert len(data["orthants"]) == 9
    text = svg.read_text()
    assert text.startswith("<svg") and "</svg>" in text


def test_sample_command_deterministic(circle_files, tmp_path):
    _, desc = circle_files
    out1, out2 = tmp_path / "c1.json", tmp_path / "c2.json"
    assert main(["sample", str(desc), "--count", "4000", "--seed", "5",
                 "--out", str(out1)]) == 0
    assert main(["sample", str(desc), "--count", "4000", "--seed", "5",
                 "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    data = json.loads(out1.read_text())
    assert data["count"] == 1
    assert data["points"][0]["point"] == [
        {"sign": 1, "val": "0"}, {"sign": 1, "val": "0"}
    ]


def test_witness_command_messages(circle_files, tmp_path, capsys):
    _, desc = circle_files
    assert main(["witness", str(desc), "--target", "((+,1),(+,1))",
                 "--budget", "100", "--seed", "2"]) == 0
    assert "no witness (excluded by outer region)" in capsys.readouterr().out
    assert main(["witness", str(desc), "--target", "((+,0),(+,0))",
                 "--budget", "4000", "--seed", "2"]) == 0
    assert "witness: (" in capsys.readouterr().out


def test_basis_command(circle_files, tmp_path, capsys):
    _, desc = circle_files
    T = tmp_path / "T.json"
    T.write_text(iojson.dumps(iojson.union_to_json(union_of(2, [point_polyhedron((0, 0))]))))
    out = tmp_path / "basis.json"
    rc = main(["basis", str(desc), "--target-set", str(T), "--seed", "5",
               "--count", "40", "--out", str(out)])
    assert rc == 0
    assert "regions ∩ = T: OK" in capsys.readouterr().out
    data = json.loads(out.read_text())
    assert data["verified"] and len(data["polys"]) >= 4


def test_check_command_exit_codes(tmp_path, capsys, monkeypatch):
    out = tmp_path / "report.json"
    rc = main(["check", "hyperfield-axioms", "--seed", "3", "--count", "300",
               "--out", str(out)])
    assert rc == 0
    report = json.loads(out.read_text())
    assert report["passed"] is True
    assert "timing" not in json.dumps(report)  # reports stay byte-stable

    rc = main(["check", "definitely-not-a-suite"])
    assert rc == 2

    import tropreal.checks as checks
    from tropreal.checks import CheckOutcome

    def failing(seed, size=None, **kw):
        return CheckOutcome("doomed", False, ["FAIL: engineered"])

    monkeypatch.setitem(checks.SUITES, "doomed", failing)
    rc = main(["check", "doomed"])
    assert rc == 1
    assert "FAIL" in capsys.readouterr().out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["region"])  # missing input
    assert exc.value.code == 2


def test_missing_file_is_usage_error(capsys):
    assert main(["trop", "/nonexistent/path.txt"]) == 2
    assert "error" in capsys.readouterr().err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tropreal.cli", "check", "region-coherence",
         "--seed", "1", "--count", "40"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "[PASS] region-coherence" in proc.stdout


def test_trop_constant_and_zero(tmp_path, capsys):
    const7 = tmp_path / "p.txt"
    const7.write_text("7")
    out = tmp_path / "t.json"
    assert main(["trop", str(const7), "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["terms"] == [{"exps": [], "coeff": {"sign": 1, "val": "0"}}]

    zero = tmp_path / "z.txt"
    zero.write_text("x - x")
    assert main(["trop", str(zero), "--out", str(out)]) == 0
    captured = capsys.readouterr()
    assert "tropicalizes to zero" in captured.err
    assert json.loads(out.read_text())["terms"] == []


def test_figures_command(tmp_path):
    outdir = tmp_path / "figs"
    assert main(["figures", "--outdir", str(outdir), "--grid", "16"]) == 0
    names = {p.name for p in outdir.iterdir()}
    assert "circle.svg" in names and "rectangles.svg" in names
    assert "halfplane.json" in names
