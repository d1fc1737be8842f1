"""Command Line Tests

bench, simulate and plot driven through ``app.main`` with captured output.
"""

import csv
import io
import json
import xml.etree.ElementTree as ET

import pytest

from app import create_app, main
from app.bench import read_csv

BENCH_FLAGS = [
    "--config", "--system", "--backend", "--sizes", "--steps", "--reps", "--dt", "--seed",
    "--workers", "--peak-gbps", "--warmup", "--stepper", "--out", "--table",
]  # fmt: skip
SIMULATE_FLAGS = [
    "--system", "--backend", "--size", "-N", "--dt", "--steps", "--observe-every", "--seed",
    "--limit", "--out", "--stepper", "--workers", "--rayleigh", "--omega", "--phi0", "--beta",
    "--disorder",
]  # fmt: skip
PLOT_FLAGS = ["--out", "--reference"]


def _rows(text):
    return list(csv.reader(io.StringIO(text)))


class TestHelp:
    """Every flag of every command is documented."""

    @pytest.mark.parametrize(
        "command,flags",
        [("bench", BENCH_FLAGS), ("simulate", SIMULATE_FLAGS), ("plot", PLOT_FLAGS)],
    )
    def test_help_lists_every_flag(self, command, flags, capsys):
        """Test --help output and exit code."""
        # Act
        code = main([command, "--help"])

        # Assert
        out = capsys.readouterr().out
        assert code == 0
        for flag in flags:
            assert flag in out, f"{flag} missing from {command} --help"

    def test_top_level_help_names_commands(self, capsys):
        """Test that the top-level help lists the three commands."""
        # Act
        code = main(["--help"])

        # Assert
        out = capsys.readouterr().out
        assert code == 0
        assert all(name in out for name in ("bench", "simulate", "plot"))

    def test_parser_factory(self):
        """Test that create_app builds a parser with the three subcommands."""
        # Act
        args = create_app().parse_args(["plot", "results.csv", "--out", "fig.svg"])

        # Assert
        assert args.command == "plot"
        assert args.reference == "serial"


class TestUsageErrors:
    """Exit code 1 with usage text."""

    def test_unknown_flag(self, capsys):
        """Test that unknown flags are rejected."""
        # Act
        code = main(["bench", "--system", "lorenz", "--backend", "serial", "--frobnicate"])

        # Assert
        captured = capsys.readouterr()
        assert code == 1
        assert "usage:" in captured.out
        assert "--frobnicate" in captured.err

    def test_missing_command(self, capsys):
        """Test that a command is required."""
        assert main([]) == 1

    def test_zero_repetitions(self, capsys):
        """Test --reps 0."""
        # Act
        code = main(["bench", "--system", "lorenz", "--backend", "serial", "--reps", "0"])

        # Assert
        assert code == 1
        assert "repetitions" in capsys.readouterr().err

    def test_missing_system(self, capsys):
        """Test that bench needs a system."""
        assert main(["bench", "--backend", "serial", "--sizes", "10"]) == 1

    def test_bad_sizes(self, capsys):
        """Test a non-numeric size list."""
        assert main(["bench", "--system", "lorenz", "--backend", "serial", "--sizes", "a,b"]) == 1

    def test_incompatible_stepper(self, capsys):
        """Test a symplectic stepper on a first-order system."""
        # Act
        code = main(["simulate", "--system", "phase", "--stepper", "verlet", "-N", "4"])

        # Assert
        assert code == 1

    def test_empty_disorder_range(self, capsys):
        """Test --disorder with LO above HI."""
        # Act
        code = main(
            ["simulate", "--system", "lattice", "--disorder", "1.5,0.5", "-N", "4", "--steps", "1"]
        )

        # Assert
        assert code == 1
        assert "1.5,0.5" in capsys.readouterr().err

    def test_non_integer_worker_environment(self, monkeypatch, capsys):
        """Test that a malformed ODE_WORKERS is a configuration error."""
        # Arrange
        monkeypatch.setenv("ODE_WORKERS", "abc")

        # Act
        code = main(
            ["simulate", "--system", "phase", "--backend", "parallel", "-N", "4", "--steps", "1"]
        )

        # Assert
        assert code == 1
        assert "ODE_WORKERS" in capsys.readouterr().err


class TestBenchCommand:
    """bench writes the CSV schema."""

    def test_single_record(self, capsys):
        """Test one size gives the header plus one record."""
        # Act
        code = main(
            [
                "bench", "--system", "lorenz", "--backend", "serial",
                "--sizes", "1024", "--steps", "10", "--reps", "3",
            ]
        )  # fmt: skip

        # Assert
        rows = _rows(capsys.readouterr().out)
        assert code == 0
        assert len(rows) == 2
        assert rows[1][:5] == ["lorenz", "serial", "false", "1024", "10"]

    def test_output_file_and_table(self, tmp_path, capsys):
        """Test --out with --table: CSV in the file, table on stdout."""
        # Arrange
        out = tmp_path / "results.csv"

        # Act
        code = main(
            [
                "bench", "--system", "lorenz,phase", "--backend", "serial,fused",
                "--sizes", "64,128", "--steps", "2", "--reps", "2", "--warmup", "0",
                "--out", str(out), "--table",
            ]
        )  # fmt: skip

        # Assert
        stdout = capsys.readouterr().out
        records = read_csv(out)
        assert code == 0
        assert len(records) == 8
        assert "lorenz (N=128)" in stdout and "phase (N=128)" in stdout
        for r in records:
            assert r.gbps == pytest.approx(r.bytes_moved / r.median_seconds / 1e9, rel=1e-15)

    def test_config_file(self, tmp_path, capsys):
        """Test settings read from JSON with a flag override."""
        # Arrange
        config = tmp_path / "bench.json"
        config.write_text(
            json.dumps(
                {"system": "lattice", "backend": ["serial"], "sizes": [16, 64], "steps": 3}
            )
        )

        # Act
        code = main(["bench", "--config", str(config), "--reps", "1"])

        # Assert
        rows = _rows(capsys.readouterr().out)
        assert code == 0
        assert [row[3] for row in rows[1:]] == ["16", "64"]

    def test_missing_config_file(self, tmp_path, capsys):
        """Test that an unreadable config file is a usage error."""
        assert main(["bench", "--config", str(tmp_path / "absent.json")]) == 1


class TestSimulateCommand:
    """simulate writes a trajectory CSV."""

    def test_zero_steps_writes_initial_condition(self, capsys):
        """Test Lorenz M = 1, R = 28, 0 steps."""
        # Act
        code = main(
            ["simulate", "--system", "lorenz", "-N", "1", "--rayleigh", "28", "--steps", "0"]
        )

        # Assert
        rows = _rows(capsys.readouterr().out)
        assert code == 0
        assert rows == [["t", "x0", "x1", "x2"], ["0", "10", "10", "10"]]

    def test_constant_phases_grow_linearly(self, capsys):
        """Test phi(t) = phi0 + omega t for equal phases and frequencies."""
        # Act
        code = main(
            [
                "simulate", "--system", "phase", "-N", "5", "--omega", "0.5", "--phi0", "1.0",
                "--dt", "0.01", "--steps", "200", "--observe-every", "20",
            ]
        )  # fmt: skip

        # Assert
        rows = _rows(capsys.readouterr().out)
        assert code == 0
        assert len(rows) == 1 + 1 + 10
        for row in rows[1:]:
            t = float(row[0])
            for value in row[1:]:
                assert abs(float(value) - (1.0 + 0.5 * t)) <= 1e-12

    def test_limit_caps_columns(self, capsys):
        """Test --limit."""
        # Act
        main(["simulate", "--system", "phase", "-N", "50", "--steps", "1", "--limit", "4"])

        # Assert
        rows = _rows(capsys.readouterr().out)
        assert rows[0] == ["t", "x0", "x1", "x2", "x3"]
        assert len(rows) == 3

    def test_lattice_run_is_deterministic(self, tmp_path, capsys):
        """Test that two identical lattice runs give byte-identical files."""
        # Arrange
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["simulate", "--system", "lattice", "-N", "64", "--beta", "0", "--seed", "3"]

        # Act
        main(args + ["--out", str(first)])
        main(args + ["--backend", "parallel", "--workers", "2", "--out", str(second)])

        # Assert
        assert first.read_bytes() == second.read_bytes()

    def test_blow_up_reports_step(self, capsys):
        """Test that a diverging run aborts with exit code 2 and the step index."""
        # Act
        code = main(
            [
                "simulate", "--system", "lorenz", "-N", "2", "--rayleigh", "28",
                "--dt", "1e100", "--steps", "5",
            ]
        )  # fmt: skip

        # Assert
        err = capsys.readouterr().err
        assert code == 2
        assert "step=" in err


class TestPlotCommand:
    """plot writes a standalone SVG."""

    @pytest.fixture
    def sweep_csv(self, tmp_path, capsys):
        """Fixture providing a two-backend bench CSV."""
        path = tmp_path / "sweep.csv"
        main(
            [
                "bench", "--system", "lorenz", "--backend", "serial,parallel",
                "--sizes", "100,1000,10000", "--steps", "2", "--reps", "1", "--out", str(path),
            ]
        )  # fmt: skip
        capsys.readouterr()
        return path

    def test_svg_is_valid_xml(self, sweep_csv, tmp_path):
        """Test that the output parses as an SVG document."""
        # Arrange
        out = tmp_path / "sweep.svg"

        # Act
        code = main(["plot", str(sweep_csv), "--out", str(out)])

        # Assert
        root = ET.parse(out).getroot()
        assert code == 0
        assert root.tag.endswith("svg")

    def test_figure_axes(self, sweep_csv, tmp_path):
        """Test log axes covering the data and a constant-1 reference line."""
        # Arrange
        from app.bench.plot import plot_records

        records = read_csv(sweep_csv)

        # Act
        fig = plot_records(records, tmp_path / "fig.svg", reference_backend="serial")

        # Assert
        ax_time, ax_rel = fig.axes[:2]
        assert ax_time.get_xscale() == "log" and ax_time.get_yscale() == "log"
        lo, hi = ax_time.get_xlim()
        assert lo <= 100 and hi >= 10_000
        ticks = [t for t in ax_time.get_xticks() if lo <= t <= hi]
        assert {100.0, 1000.0, 10000.0} <= set(ticks)
        reference = [line for line in ax_rel.get_lines() if line.get_linestyle() == "--"]
        assert reference and set(reference[0].get_ydata()) == {1.0}

    def test_single_record(self, tmp_path, capsys):
        """Test a one-record CSV."""
        # Arrange
        path, out = tmp_path / "one.csv", tmp_path / "one.svg"
        main(["bench", "--system", "phase", "--backend", "serial", "--sizes", "100",
              "--steps", "1", "--reps", "1", "--out", str(path)])  # fmt: skip

        # Act
        code = main(["plot", str(path), "--out", str(out)])

        # Assert
        assert code == 0
        ET.parse(out)

    def test_malformed_csv(self, tmp_path, capsys):
        """Test exit code 2 and a line-numbered diagnostic."""
        # Arrange
        path = tmp_path / "bad.csv"
        path.write_text(
            "system,backend,fused,N,steps,median_s,min_s,max_s,bytes,gbps,peak_frac,passes\n"
            "lorenz,serial\n"
        )

        # Act
        code = main(["plot", str(path), "--out", str(tmp_path / "bad.svg")])

        # Assert
        assert code == 2
        assert "line 2" in capsys.readouterr().err
