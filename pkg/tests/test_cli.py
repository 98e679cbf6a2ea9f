import json
import math

import numpy as np
import pytest
from click.testing import CliRunner

from paulicav import cli
from paulicav.model import demo_model_path


@pytest.fixture()
def runner():
    return CliRunner()


def read_csv(path):
    lines = path.read_text(encoding="utf-8").splitlines()
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, rows


class TestCount:
    def test_table_row_5_3_4(self, runner):
        result = runner.invoke(cli.main, ["count", "--levels", "5", "--ground", "3", "-n", "4"])
        assert result.exit_code == 0
        assert "297 | 35 (12%) | 2 (1%) | 81 | 15 (43%) | 0 (0%)" in result.output

    def test_table_row_2_1_2(self, runner):
        result = runner.invoke(cli.main, ["count", "--levels", "2", "--ground", "1", "-n", "2"])
        assert result.exit_code == 0
        assert "3 | 2 (67%) | 1 (33%) | 1 | 1 (50%) | 0 (0%)" in result.output

    def test_single_molecule_passes_everything(self, runner):
        result = runner.invoke(cli.main, ["count", "--levels", "4", "--ground", "2", "-n", "1"])
        assert result.exit_code == 0
        # no projection effect at n = 1: all sectors equal the raw count
        assert "4 | 4 (100%) | 4 (100%)" in result.output

    def test_full_manifold(self, runner):
        result = runner.invoke(
            cli.main,
            ["count", "--levels", "3", "--ground", "1", "-n", "2",
             "--manifold", "full", "--nmax", "1"],
        )
        assert result.exit_code == 0
        # D = 18, boson 12, fermion 6
        assert "18 | 12 (67%) | 6 (33%)" in result.output

    def test_csv_output_full_precision(self, runner, tmp_path):
        out = tmp_path / "row.csv"
        result = runner.invoke(
            cli.main,
            ["count", "--levels", "5", "--ground", "3", "-n", "4", "--out", str(out)],
        )
        assert result.exit_code == 0
        header, rows = read_csv(out)
        row = dict(zip(header, rows[0]))
        assert row["states_none"] == "297"
        assert float(row["states_boson_pct"]) == pytest.approx(100 * 35 / 297)

    def test_model_and_synthetic_are_exclusive(self, runner):
        result = runner.invoke(
            cli.main,
            ["count", "--levels", "5", "--ground", "2", "-n", "2",
             "--model", str(demo_model_path())],
        )
        assert result.exit_code == cli.EXIT_VALIDATION

    def test_compute_cap_exit_code(self, runner):
        result = runner.invoke(
            cli.main,
            ["count", "--levels", "10", "--ground", "5", "-n", "9",
             "--manifold", "full"],
        )
        assert result.exit_code == cli.EXIT_CAP


class TestTable1:
    def test_default_has_all_rows(self, runner):
        result = runner.invoke(cli.main, ["table1"])
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert len(lines) == 28  # header + 27 data rows
        assert lines[1] == "2,1,2,3,2,67,1,33,1,1,50,0,0"
        assert lines[-1] == "10,7,4,6517,462,7,140,2,2401,210,45,35,25"

    def test_check_passes(self, runner):
        result = runner.invoke(cli.main, ["table1", "--check"])
        assert result.exit_code == 0
        assert "check passed" in result.output

    def test_check_detects_mismatch(self, runner, monkeypatch):
        monkeypatch.setattr(cli, "_table1_csv", lambda stats: "corrupted\n")
        result = runner.invoke(cli.main, ["table1", "--check"])
        assert result.exit_code == cli.EXIT_CHECK

    def test_boson_column_projection(self, runner):
        result = runner.invoke(cli.main, ["table1", "--stats", "boson"])
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0] == "m,m_g,n,states_boson,states_boson_pct,bright_boson,bright_boson_pct"
        assert len(lines) == 28
        assert lines[1] == "2,1,2,2,67,1,50"

    def test_out_matches_stdout(self, runner, tmp_path):
        out = tmp_path / "t1.csv"
        piped = runner.invoke(cli.main, ["table1"]).output
        result = runner.invoke(cli.main, ["table1", "--out", str(out)])
        assert result.exit_code == 0
        assert out.read_text(encoding="utf-8") == piped


class TestSpectrum:
    def test_demo_sector_dims(self, runner, tmp_path):
        out = tmp_path / "spec.csv"
        result = runner.invoke(
            cli.main,
            ["spectrum", "--model", str(demo_model_path()), "-n", "3",
             "--out", str(out)],
        )
        assert result.exit_code == 0
        assert "sector=none dim=2000" in result.output
        assert "sector=boson dim=440" in result.output
        assert "sector=fermion dim=240" in result.output
        for tag, dim in (("none", 2000), ("boson", 440), ("fermion", 240)):
            header, rows = read_csv(tmp_path / f"spec_{tag}.csv")
            assert header == ["energy_cm1", "photon_expectation", "brightness_class"]
            assert len(rows) == dim

    def test_zero_coupling_has_no_polaritonic_class(self, runner, tmp_path):
        out = tmp_path / "g0.csv"
        result = runner.invoke(
            cli.main,
            ["spectrum", "--levels", "3", "--ground", "1", "-n", "2",
             "--coupling", "0", "--stats", "none", "--out", str(out)],
        )
        assert result.exit_code == 0
        _, rows = read_csv(tmp_path / "g0_none.csv")
        classes = {row[2] for row in rows}
        assert classes <= {"dark", "photonic"}

    def test_two_level_boson_polaritons_absolute(self, runner, tmp_path):
        out = tmp_path / "b.csv"
        result = runner.invoke(
            cli.main,
            ["spectrum", "--levels", "2", "--ground", "1", "-n", "2",
             "--cavity-wn", "1681", "--coupling", "490", "--rwa",
             "--manifold", "first-excited", "--stats", "boson",
             "--absolute", "--out", str(out)],
        )
        assert result.exit_code == 0
        _, rows = read_csv(tmp_path / "b_boson.csv")
        assert len(rows) == 2
        energies = [float(r[0]) for r in rows]
        expected = [1681 - 490 * math.sqrt(2), 1681 + 490 * math.sqrt(2)]
        assert energies == pytest.approx(expected, rel=1e-10)
        assert {r[2] for r in rows} == {"polaritonic"}

    def test_relative_energies_use_unsymmetrized_ground(self, runner, tmp_path):
        out = tmp_path / "rel.csv"
        result = runner.invoke(
            cli.main,
            ["spectrum", "--levels", "2", "--ground", "1", "-n", "2",
             "--stats", "none", "--out", str(out)],
        )
        assert result.exit_code == 0
        _, rows = read_csv(tmp_path / "rel_none.csv")
        assert float(rows[0][0]) == pytest.approx(0.0, abs=1e-9)

    def test_missing_model_is_validation_error(self, runner):
        result = runner.invoke(cli.main, ["spectrum", "-n", "2"])
        assert result.exit_code == cli.EXIT_VALIDATION


class TestThermo:
    def test_delta_columns_of_none_are_zero(self, runner, tmp_path):
        out = tmp_path / "th.csv"
        result = runner.invoke(
            cli.main,
            ["thermo", "--levels", "2", "--ground", "1", "-n", "2",
             "--tmin", "50", "--tmax", "60", "--tstep", "5", "--out", str(out)],
        )
        assert result.exit_code == 0
        header, rows = read_csv(out)
        for col in ("dq_none", "du_none", "dc_none", "ds_none", "dg_none"):
            idx = header.index(col)
            assert all(float(row[idx]) == 0.0 for row in rows)

    def test_demo_low_t_heat_capacity_inequality(self, runner, tmp_path):
        out = tmp_path / "demo.csv"
        result = runner.invoke(
            cli.main,
            ["thermo", "--model", str(demo_model_path()), "-n", "3",
             "--tmin", "5", "--tmax", "50", "--tstep", "5", "--out", str(out)],
        )
        assert result.exit_code == 0
        header, rows = read_csv(out)
        ic_none = header.index("c_none")
        ic_boson = header.index("c_boson")
        for row in rows:
            assert float(row[ic_boson]) <= float(row[ic_none]) + 1e-12

    def test_ground_shift_reported(self, runner, tmp_path):
        out = tmp_path / "th2.csv"
        result = runner.invoke(
            cli.main,
            ["thermo", "--model", str(demo_model_path()), "-n", "2",
             "--tmin", "100", "--tmax", "100.5", "--tstep", "0.5",
             "--out", str(out)],
        )
        assert result.exit_code == 0
        err = result.stderr
        assert "E0[fermion] - E0[none]" in err

    def test_byte_identical_reruns(self, runner, tmp_path):
        args = ["thermo", "--levels", "3", "--ground", "1", "-n", "2",
                "--tmin", "10", "--tmax", "20", "--tstep", "2"]
        out1 = tmp_path / "a.csv"
        out2 = tmp_path / "b.csv"
        assert runner.invoke(cli.main, args + ["--out", str(out1)]).exit_code == 0
        assert runner.invoke(cli.main, args + ["--out", str(out2)]).exit_code == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_bad_grid_is_validation_error(self, runner):
        result = runner.invoke(
            cli.main,
            ["thermo", "--levels", "2", "--ground", "1", "-n", "1",
             "--tmin", "100", "--tmax", "50"],
        )
        assert result.exit_code == cli.EXIT_VALIDATION


class TestModelErrors:
    def test_invalid_model_file_exit_code(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({
            "name": "bad", "m_g": 1,
            "levels": [{"energy_cm1": 0.0, "label": "a"},
                        {"energy_cm1": 1.0, "label": "b"}],
            "dipole_au": [[0.0, 1.0], [0.5, 0.0]],
        }))
        result = runner.invoke(cli.main, ["count", "--model", str(bad), "-n", "2"])
        assert result.exit_code == cli.EXIT_VALIDATION
