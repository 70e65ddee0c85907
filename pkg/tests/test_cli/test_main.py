"""Tests for the command-line interface."""

import csv
import io
import json
import logging
import math

import pytest
import yaml

from core.models.config import LoggingConfig
from modules.actions.closed_forms import planck_action
from thermodarboux.cli import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION,
    EXIT_VERIFY_FAILED,
    attach_values,
    main,
    setup_logging,
)
from thermodarboux.output import OUTPUT_DIR_ENV


@pytest.fixture(autouse=True)
def restore_root_logger():
    """Drop the handlers each CLI run installs on the root logger."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def read_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


class TestArguments:
    """Test cases for argument handling."""

    def test_attach_values(self):
        """Test that negative grids and lambdas are kept as values."""
        argv = ["family", "--grid", "-2:2:5", "--lambda", "-1,inf", "--log"]
        assert attach_values(argv) == ["family", "--grid=-2:2:5", "--lambda=-1,inf", "--log"]

    def test_no_command(self, capsys):
        """Test that a missing subcommand prints help and exits 1."""
        assert main([]) == EXIT_USAGE
        assert "usage" in capsys.readouterr().out

    def test_unknown_option(self, capsys):
        """Test that an unknown option is a usage error."""
        assert main(["action", "--bogus"]) == EXIT_USAGE
        assert "unrecognized arguments" in capsys.readouterr().err

    def test_unknown_run_key_in_config(self, temp_dir):
        """Test that an unknown run key in the config file exits 1."""
        config_path = temp_dir / "bad.yaml"
        config_path.write_text(yaml.dump({"run": {"colour": "red"}}))
        assert main(["--config", str(config_path), "action"]) == EXIT_USAGE

    def test_unknown_family(self, capsys):
        """Test that an unknown family tag exits 1."""
        assert main(["action", "--family", "bose"]) == EXIT_USAGE
        assert "Unknown action family" in capsys.readouterr().err


class TestLogging:
    """Test cases for setup_logging."""

    def test_colored(self, mocker):
        """Test that colored output goes through coloredlogs on stderr."""
        install = mocker.patch("thermodarboux.cli.coloredlogs.install")
        setup_logging(LoggingConfig(level="WARNING", console_colors=True))
        install.assert_called_once()
        assert install.call_args.kwargs["level"] == logging.WARNING

    def test_plain(self, mocker):
        """Test that plain output uses logging.basicConfig and -v forces DEBUG."""
        basic = mocker.patch("thermodarboux.cli.logging.basicConfig")
        install = mocker.patch("thermodarboux.cli.coloredlogs.install")
        setup_logging(LoggingConfig(console_colors=False), verbose=True)
        install.assert_not_called()
        assert basic.call_args.kwargs["level"] == logging.DEBUG


class TestActionCommand:
    """Test cases for 'thermodarboux action'."""

    def test_planck_table(self, capsys):
        """Test header and row count of a Planck table."""
        assert main(["action", "--family", "planck", "--grid", "0.5:5:10"]) == EXIT_OK
        header, rows = read_csv(capsys.readouterr().out)
        assert header == ["x", "f", "f_prime"]
        assert len(rows) == 10
        for row in rows:
            assert float(row[1]) == planck_action(float(row[0]))

    def test_general_zero_mode_through_origin(self, capsys):
        """Test that A = B gives f(0) = 0 on a grid through x = 0."""
        argv = ["action", "--family", "general", "--A", "0.5", "--B", "0.5", "--grid", "-2:2:5"]
        assert main(argv) == EXIT_OK
        _, rows = read_csv(capsys.readouterr().out)
        assert rows[2][:2] == ["0", "0"]

    def test_planck_pole_strict(self, capsys):
        """Test that the Planck pole at x = 0 aborts with exit 2."""
        assert main(["action", "--family", "planck", "--grid", "-1:1:3"]) == EXIT_VALIDATION
        assert "x = 0.0" in capsys.readouterr().err

    def test_planck_pole_permissive(self, capsys):
        """Test that --permissive flags the singular row instead."""
        argv = ["action", "--family", "planck", "--grid", "-1:1:3", "--permissive"]
        assert main(argv) == EXIT_OK
        _, rows = read_csv(capsys.readouterr().out)
        assert rows[1] == ["0", "singular", "singular"]
        assert float(rows[0][1]) == planck_action(-1.0)

    def test_energy_column(self, capsys):
        """Test the U column when omega is given."""
        assert main(["action", "--grid", "1,2", "--omega", "3"]) == EXIT_OK
        header, rows = read_csv(capsys.readouterr().out)
        assert header == ["x", "f", "f_prime", "U"]
        assert float(rows[0][3]) == 3.0 * planck_action(1.0)

    def test_json_output(self, capsys):
        """Test JSON output with command metadata."""
        assert main(["action", "--grid", "1,2", "--format", "json"]) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document["command"] == "action"
        assert document["family"] == "planck"
        assert document["columns"] == ["x", "f", "f_prime"]
        assert len(document["rows"]) == 2


class TestFamilyCommand:
    """Test cases for 'thermodarboux family'."""

    def test_vacuum_fermionic_branch(self, capsys):
        """Test that lambda = 1/hbar gives f_g = -hbar/2."""
        argv = ["family", "--seed", "vacuum", "--lambda", "1", "--grid", "0:2:5"]
        assert main(argv) == EXIT_OK
        header, rows = read_csv(capsys.readouterr().out)
        assert header == ["x", "lambda", "f_g", "V_1g", "w_lambda", "I0", "v"]
        assert len(rows) == 5
        for row in rows:
            assert row[1] == "1"
            assert float(row[2]) == pytest.approx(-0.5, abs=1e-12)

    def test_far_tail_rows(self, capsys):
        """Test that rows beyond the exponent range stay finite, with I0 written as inf."""
        argv = ["family", "--seed", "vacuum", "--lambda", "2", "--grid", "720,800"]
        assert main(argv) == EXIT_OK
        _, rows = read_csv(capsys.readouterr().out)
        for row in rows:
            assert float(row[2]) == pytest.approx(-0.5, abs=1e-12)
            assert float(row[3]) == pytest.approx(0.25, abs=1e-12)
            assert row[5] == "inf"

    def test_invalid_lambda(self, capsys):
        """Test that an invalid lambda exits 2 with its report on stderr."""
        argv = ["family", "--seed", "vacuum", "--lambda", "0.5", "--grid", "-2:2:9"]
        assert main(argv) == EXIT_VALIDATION
        err = capsys.readouterr().err
        assert '"valid": false' in err
        assert '"brackets"' in err

    def test_seed_member_reproduces_planck(self, capsys):
        """Test that lambda = inf reproduces the Planck action."""
        argv = ["family", "--seed", "planck", "--lambda", "inf", "--grid", "0.5:2:4"]
        assert main(argv) == EXIT_OK
        _, rows = read_csv(capsys.readouterr().out)
        for row in rows:
            assert row[1] == "inf"
            assert float(row[2]) == planck_action(float(row[0]))

    def test_include_seed(self, capsys):
        """Test that --include-seed appends the lambda = inf series."""
        argv = ["family", "--lambda", "2", "--include-seed", "--grid", "1,2,3"]
        assert main(argv) == EXIT_OK
        _, rows = read_csv(capsys.readouterr().out)
        assert [row[1] for row in rows] == ["2", "2", "2", "inf", "inf", "inf"]

    def test_identical_runs_are_identical(self, capsys):
        """Test byte-identical output for identical invocations."""
        argv = ["family", "--seed", "vacuum", "--lambda", "2,4", "--grid", "-3:3:13"]
        assert main(argv) == EXIT_OK
        first = capsys.readouterr().out
        assert main(argv) == EXIT_OK
        assert capsys.readouterr().out == first

    def test_output_dir(self, temp_dir, monkeypatch, capsys):
        """Test that relative --output paths land in THERMODARBOUX_OUTPUT_DIR."""
        monkeypatch.setenv(OUTPUT_DIR_ENV, str(temp_dir))
        argv = ["family", "--lambda", "2", "--grid", "1,2", "--output", "members.csv"]
        assert main(argv) == EXIT_OK
        assert capsys.readouterr().out == ""
        header, rows = read_csv((temp_dir / "members.csv").read_text())
        assert header[0] == "x"
        assert len(rows) == 2


class TestVerifyCommand:
    """Test cases for 'thermodarboux verify'."""

    def test_riccati_csv(self, capsys):
        """Test a passing suite as CSV."""
        assert main(["verify", "--suite", "riccati"]) == EXIT_OK
        header, rows = read_csv(capsys.readouterr().out)
        assert header == ["name", "max_residual", "tolerance", "passed"]
        assert rows
        assert all(row[3] == "true" for row in rows)

    def test_json_report(self, capsys):
        """Test the JSON report layout."""
        assert main(["verify", "--suite", "entropy", "--format", "json"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["suite"] == "entropy"
        assert report["overall"] is True
        assert set(report["checks"][0]) == {"name", "max_residual", "tolerance", "passed"}

    def test_failure_exit_code(self, capsys):
        """Test that an unreachable tolerance exits 3."""
        assert main(["verify", "--suite", "riccati", "--tolerance", "1e-300"]) == EXIT_VERIFY_FAILED
        assert "FAILED" in capsys.readouterr().err


class TestSpectrumCommand:
    """Test cases for 'thermodarboux spectrum'."""

    def test_reference_and_member(self, capsys):
        """Test the spectrum table with a reference series."""
        argv = ["spectrum", "--grid", "0.5,1,2", "--lambda", "2", "--include-seed", "--beta", "1"]
        assert main(argv) == EXIT_OK
        header, rows = read_csv(capsys.readouterr().out)
        assert header == ["omega", "beta", "lambda", "R", "P", "regime"]
        assert len(rows) == 6
        assert [row[2] for row in rows[:2]] == ["2", "inf"]
        reference = rows[1]
        assert float(reference[4]) == pytest.approx(0.5 / math.pi * planck_action(0.5), rel=1e-15)
        assert reference[5] == "positive_T_boson"

    def test_bad_resistance(self, capsys):
        """Test that an unknown resistance kind exits 1."""
        assert main(["spectrum", "--resistance", "inductor:L=1"]) == EXIT_USAGE
        assert "Unknown resistance kind" in capsys.readouterr().err
