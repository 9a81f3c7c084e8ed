"""
Tests for the command-line interface.
"""
import json
import re

import pytest

from src.application.use_cases.run_experiment import RunExperimentUseCase
from src.cli.main import EXIT_CONFIG, EXIT_FAILURE, EXIT_NUMERICAL, EXIT_OK, main


def _max_log10(stdout: str) -> float:
    match = re.search(r"max_log10=(\S+)", stdout)
    assert match, stdout
    return float(match.group(1))


class TestInvert:

    def test_hat_function(self, tmp_path, capsys):
        out = tmp_path / "hat.csv"
        code = main(['invert', '--function', 'f3', '--method', 'wa', '--order', '1', '--scale', '1',
                     '--out', str(out)])
        assert code == EXIT_OK
        assert "WA1-1 min_log10=" in capsys.readouterr().out

        lines = out.read_text().splitlines()
        assert lines[0] == "x,approx,reference,abs_error"
        assert len(lines) == 4097 + 3

        coefficients = (tmp_path / "hat_coefficients.csv").read_text().splitlines()
        assert coefficients[0] == "k,coefficient"
        assert len(coefficients) == 4
        k, c0 = coefficients[1].split(',')
        assert k == "0"
        assert float(c0) == pytest.approx(2.0, abs=1e-6)

    def test_gaussian_cos(self, tmp_path, capsys):
        code = main(['invert', '--function', 'f5', '--method', 'cos', '--terms', '64',
                     '--out', str(tmp_path / "gauss.csv")])
        assert code == EXIT_OK
        assert _max_log10(capsys.readouterr().out) <= -7.23
        assert not (tmp_path / "gauss_coefficients.csv").exists()

    def test_step_cos_shows_gibbs(self, tmp_path, capsys):
        code = main(['invert', '--function', 'f1', '--method', 'cos', '--terms', '2048',
                     '--out', str(tmp_path / "step.csv")])
        assert code == EXIT_OK
        assert _max_log10(capsys.readouterr().out) > -2.0

    def test_json_output(self, tmp_path):
        out = tmp_path / "report.json"
        code = main(['invert', '--function', 'f2', '--alpha', '50', '--method', 'cos', '--terms', '64',
                     '--grid', '65', '--format', 'json', '--out', str(out)])
        assert code == EXIT_OK
        data = json.loads(out.read_text())
        assert data['method_label'] == "COS-64"
        assert data['grid_points'] == 65
        assert len(data['points']) == 65

    def test_json_coefficients(self, tmp_path):
        out = tmp_path / "hat.json"
        code = main(['invert', '--function', 'f3', '--order', '1', '--scale', '1', '--grid', '9',
                     '--format', 'json', '--out', str(out)])
        assert code == EXIT_OK

        data = json.loads((tmp_path / "hat_coefficients.json").read_text())
        assert data['label'] == "WA1-1"
        assert data['spec']['coefficient_count'] == 3
        assert data['coefficients'][0] == pytest.approx(2.0, abs=1e-6)
        budget = data['metadata']['error_budget']
        assert budget['total'] == pytest.approx(budget['discretization_bound'] + budget['roundoff_estimate'])
        assert not (tmp_path / "hat_coefficients.csv").exists()

    def test_interval_override(self, tmp_path):
        out = tmp_path / "f2.json"
        code = main(['invert', '--function', 'f2', '--method', 'cos', '--terms', '32', '--interval=-2,2',
                     '--grid', '9', '--format', 'json', '--out', str(out)])
        assert code == EXIT_OK
        assert json.loads(out.read_text())['interval'] == [-2.0, 2.0]

    def test_bromwich(self, tmp_path, capsys):
        code = main(['invert', '--function', 'exp', '--method', 'bromwich', '--grid', '257',
                     '--out', str(tmp_path / "bromwich.csv")])
        assert code == EXIT_OK
        stdout = capsys.readouterr().out
        assert stdout.startswith("BROMWICH")
        assert _max_log10(stdout) < -3.0

    def test_laplace_wavelet(self, tmp_path, capsys):
        out = tmp_path / "laplace.csv"
        code = main(['invert', '--function', 'exp', '--method', 'wa', '--order', '1', '--scale', '6',
                     '--grid', '257', '--out', str(out)])
        assert code == EXIT_OK
        assert capsys.readouterr().out.startswith("WA1-6")
        assert (tmp_path / "laplace_coefficients.csv").exists()

    def test_verbose_summary(self, tmp_path, capsys):
        code = main(['invert', '--function', 'f3', '--order', '1', '--scale', '1', '--grid', '17', '-v',
                     '--out', str(tmp_path / "hat.csv")])
        assert code == EXIT_OK
        assert "RECONSTRUCTION ERROR: WA1-1" in capsys.readouterr().out


class TestExitCodes:

    @pytest.mark.parametrize("argv", [
        ['invert', '--bogus'],
        ['invert', '--function', 'f2', '--method', 'simpson'],
        ['invert', '--function', 'f9', '--method', 'cos', '--terms', '8'],
        ['invert', '--function', 'f2', '--method', 'wa', '--scale', '2'],
        ['invert', '--function', 'f2', '--method', 'cos'],
        ['invert', '--function', 'f2', '--method', 'wa', '--order', '1', '--scale', '2', '--radius', '1.0'],
        ['invert', '--function', 'f2', '--method', 'cos', '--terms', '8', '--interval', '1,-1'],
        ['invert', '--function', 'exp', '--method', 'cos', '--terms', '8'],
        ['invert', '--function', 'f2', '--method', 'bromwich'],
        ['table', 'bogus'],
    ])
    def test_configuration_errors(self, argv, tmp_path):
        assert main(argv + ['--out', str(tmp_path / "r.csv")]) == EXIT_CONFIG

    def test_invalid_catalog_parameter(self, tmp_path):
        argv = ['invert', '--function', 'f2', '--alpha', '-1', '--method', 'cos', '--terms', '8',
                '--out', str(tmp_path / "r.csv")]
        assert main(argv) == EXIT_CONFIG

    def test_numerical_failure(self, tmp_path):
        argv = ['invert', '--function', 'f2', '--method', 'wa', '--order', '0', '--scale', '3',
                '--radius', '1e-300', '--out', str(tmp_path / "r.csv")]
        assert main(argv) == EXIT_NUMERICAL
        assert not (tmp_path / "r.csv").exists()

    def test_unexpected_failure(self, tmp_path, monkeypatch):
        def explode(self, config, save_results=True):
            raise RuntimeError("boom")

        monkeypatch.setattr(RunExperimentUseCase, 'execute_invert', explode)
        argv = ['invert', '--function', 'f3', '--order', '1', '--scale', '1',
                '--out', str(tmp_path / "r.csv")]
        assert main(argv) == EXIT_FAILURE


class TestConfigFile:

    def test_config_with_flag_override(self, tmp_path, capsys):
        config = tmp_path / "experiment.env"
        config.write_text("function=f4\nmethod=wa\norder=1\nscale=1\ngrid=33\n")

        code = main(['invert', '--config', str(config), '--out', str(tmp_path / "a.csv")])
        assert code == EXIT_OK
        assert capsys.readouterr().out.startswith("WA1-1")

        code = main(['invert', '--config', str(config), '--scale', '2', '--out', str(tmp_path / "b.csv")])
        assert code == EXIT_OK
        assert capsys.readouterr().out.startswith("WA1-2")

    def test_unknown_key(self, tmp_path):
        config = tmp_path / "experiment.env"
        config.write_text("function=f4\ncolour=blue\n")
        assert main(['invert', '--config', str(config), '--out', str(tmp_path / "a.csv")]) == EXIT_CONFIG

    def test_missing_file(self, tmp_path):
        argv = ['invert', '--config', str(tmp_path / "missing.env"), '--out', str(tmp_path / "a.csv")]
        assert main(argv) == EXIT_CONFIG


class TestTableCommand:

    def test_prefactor(self, tmp_path, capsys):
        assert main(['table', 'prefactor', '--out', str(tmp_path)]) == EXIT_OK
        lines = (tmp_path / "prefactor.csv").read_text().splitlines()
        assert lines[0] == "r,m=8,m=9,m=10"
        assert len(lines) == 17
        assert "m=10" in capsys.readouterr().out


class TestSweepCommand:

    SWEEP = ['sweep-r', '--function', 'f3', '--order', '1', '--scale', '1', '--grid', '33']

    def test_single_radius(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(self.SWEEP + ['--r-min', '0.9995', '--r-max', '0.9995', '--steps', '1', '--out', str(out)]) == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == "r,x,log10_abs_error"
        assert len(lines) == 34
        assert all(line.startswith("0.9995,") for line in lines[1:])

    def test_deterministic(self, tmp_path):
        args = ['--r-min', '0.9', '--r-max', '0.99', '--steps', '3']
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(self.SWEEP + args + ['--out', str(first)]) == EXIT_OK
        assert main(self.SWEEP + args + ['--out', str(second)]) == EXIT_OK
        assert first.read_bytes() == second.read_bytes()
        assert len(first.read_text().splitlines()) == 1 + 3 * 33

    @pytest.mark.parametrize("args", [
        ['--r-min', '0.99', '--r-max', '0.9', '--steps', '3'],
        ['--r-min', '0.0', '--r-max', '0.9', '--steps', '3'],
        ['--r-min', '0.9', '--r-max', '0.99', '--steps', '0'],
    ])
    def test_invalid_ranges(self, args, tmp_path):
        assert main(self.SWEEP + args + ['--out', str(tmp_path / "s.csv")]) == EXIT_CONFIG

    def test_requires_wavelet_method(self, tmp_path):
        argv = ['sweep-r', '--function', 'f2', '--method', 'cos', '--terms', '8',
                '--r-min', '0.9', '--r-max', '0.99', '--out', str(tmp_path / "s.csv")]
        assert main(argv) == EXIT_CONFIG
