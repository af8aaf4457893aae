import csv
import json
import math
import subprocess

import pytest
from numpy.testing import assert_allclose

from cpshift import plane
from cpshift.cli import EPSILON_0, main, parse_angle
from cpshift.types import PlaneConfig


@pytest.mark.parametrize("text,want", [
    ("pi", math.pi),
    ("pi/2", math.pi / 2),
    ("3*pi/4", 3 * math.pi / 4),
    ("0.75pi", 0.75 * math.pi),
    ("-pi/2", -math.pi / 2),
    ("2.5", 2.5),
    ("1e-2", 0.01),
])
def test_parse_angle(text, want):
    assert parse_angle(text) == pytest.approx(want, rel=1e-15)


def test_parse_angle_rejects_garbage():
    with pytest.raises(ValueError):
        parse_angle("three halves")


def _stdout_fields(capsys):
    out = capsys.readouterr().out
    fields = {}
    for line in out.splitlines():
        key, _, rest = line.partition(":")
        # shift_iso carries a trailing unit tag
        fields[key.strip()] = rest.split()[0] if rest.split() else ""
    return fields


def test_eval_plane(capsys):
    assert main(["eval", "plane", "--d", "1"]) == 0
    fields = _stdout_fields(capsys)
    assert float(fields["xi_rho"]) == pytest.approx(0.125, rel=1e-9)
    assert float(fields["xi_phi"]) == pytest.approx(0.0625, rel=1e-9)
    assert float(fields["shift_iso"]) == pytest.approx(-0.25 / 3, rel=1e-9)
    assert fields["regime"] == "-"


def test_eval_wire_reports_regime(capsys):
    assert main(["eval", "wire", "--R", "1", "--rho", "1.1",
                 "--E", "0.01"]) == 0
    fields = _stdout_fields(capsys)
    assert float(fields["xi_rho"]) > 0.0
    assert fields["regime"].startswith("NR_close")


def test_eval_halfplane_accepts_pi_literal(capsys):
    assert main(["eval", "halfplane", "--rho", "1", "--phi", "pi",
                 "--E", "1"]) == 0
    fields = _stdout_fields(capsys)
    assert float(fields["xi_phi"]) == 0.0
    assert float(fields["xi_rho"]) == pytest.approx(0.0225358917618,
                                                    rel=1e-6)


def test_eval_si_units(capsys):
    assert main(["eval", "plane", "--d", "1"]) == 0
    reduced = float(_stdout_fields(capsys)["shift_iso"])
    assert main(["eval", "plane", "--d", "1", "--units", "si",
                 "--mu-si", "2e-29", "--length-si", "1e-6"]) == 0
    si = float(_stdout_fields(capsys)["shift_iso"])
    factor = (2e-29) ** 2 / (4 * math.pi * EPSILON_0 * (1e-6) ** 3)
    assert_allclose(si, reduced * factor, rtol=1e-12)


def test_usage_errors_exit_2(capsys):
    assert main(["eval", "plane"]) == 2
    assert main(["eval", "wire", "--R", "1"]) == 2
    assert main(["eval", "halfplane", "--rho", "1"]) == 2
    assert main(["regimes", "--d", "1", "--R", "1"]) == 2
    assert main(["sweep", "plane", "--var", "phi", "--min", "0",
                 "--max", "1"]) == 2
    capsys.readouterr()


def test_domain_error_exits_1(capsys):
    assert main(["eval", "plane", "--d", "-1"]) == 1
    assert "error" in capsys.readouterr().err


def test_sweep_plane_csv(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    rc = main(["sweep", "plane", "--var", "d", "--min", "0.5", "--max", "2",
               "--count", "4", "--E", "1", "--out", str(out)])
    assert rc == 0
    with out.open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4
    assert [r["d"] for r in rows] == ["0.5", "1", "1.5", "2"]
    for r in rows:
        want = plane.xi_plane(PlaneConfig(d=float(r["d"]), E=1.0))
        assert_allclose(float(r["xi_rho"]), want.rho_comp, rtol=1e-10)
        assert_allclose(float(r["shift_iso"]),
                        -(want.rho_comp + want.phi_comp + want.z_comp) / 3,
                        rtol=1e-10)
        assert r["error"] == ""
    capsys.readouterr()


def test_sweep_is_byte_deterministic(tmp_path, capsys):
    args = ["sweep", "halfplane", "--var", "phi", "--min", "pi/4",
            "--max", "pi", "--count", "3", "--rho", "1", "--E", "1",
            "--spacing", "linear"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    capsys.readouterr()


def test_sweep_continues_past_failed_rows(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    rc = main(["sweep", "halfplane", "--var", "phi", "--min", "1e-8",
               "--max", "pi", "--count", "3", "--rho", "1", "--E", "1",
               "--out", str(out)])
    assert rc == 0
    assert "1 of 3 rows failed" in capsys.readouterr().err
    with out.open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert rows[0]["error"] != "" and rows[0]["xi_rho"] == "nan"
    assert rows[1]["error"] == "" and float(rows[1]["xi_rho"]) > 0.0
    # the final row is exactly behind the sheet, azimuthal null
    assert float(rows[2]["xi_phi"]) == 0.0


def test_sweep_json_schema(tmp_path, capsys):
    out = tmp_path / "sweep.json"
    rc = main(["sweep", "wire", "--var", "d", "--min", "0.5", "--max", "1",
               "--count", "2", "--R", "1", "--E", "1", "--format", "json",
               "--out", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert set(doc) == {"meta", "rows"}
    assert doc["meta"]["geometry"] == "wire"
    assert doc["meta"]["var"] == "d"
    assert len(doc["rows"]) == 2
    row = doc["rows"][0]
    assert row["d"] == 0.5 and row["R"] == 1.0
    assert row["xi_rho"] > row["xi_phi"] > 0.0
    assert row["regime"].startswith("NR")
    capsys.readouterr()


def test_figure_direction_map(tmp_path, capsys):
    out = tmp_path / "fig4.csv"
    rc = main(["figure", "fig4_direction", "--points", "5",
               "--out", str(out)])
    assert rc == 0
    with out.open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4 * 5
    for r in rows:
        norm = math.hypot(float(r["dir_rho"]), float(r["dir_phi"]))
        assert norm == pytest.approx(1.0, rel=1e-9) or r["degenerate"] == "1"
    capsys.readouterr()


def test_figure_wire_triples(tmp_path, capsys):
    out = tmp_path / "fig6.csv"
    rc = main(["figure", "fig6_combined", "--points", "3",
               "--R-list", "1", "--out", str(out)])
    assert rc == 0
    with out.open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 3
    assert set(rows[0]) == {"d_times_E", "xi_rho_R1", "xi_phi_R1",
                            "xi_z_R1"}
    assert float(rows[0]["xi_rho_R1"]) > float(rows[-1]["xi_rho_R1"])
    capsys.readouterr()


def test_regimes_command(capsys):
    assert main(["regimes", "--d", "0.1", "--R", "1", "--lam", "10"]) == 0
    out = capsys.readouterr().out
    assert "NR_close" in out
    assert main(["regimes", "--d", "0.1", "--R", "1", "--E", "0.1"]) == 0
    out = capsys.readouterr().out
    assert "NR_close" in out


def test_console_script_version():
    res = subprocess.run(["cpshift", "--version"], capture_output=True,
                         text=True)
    assert res.returncode == 0
    assert res.stdout.strip()
