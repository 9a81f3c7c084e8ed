"""
Tests for settings, logging setup and experiment configuration.
"""
import io
import logging
import warnings

import pytest

from src.config.logging_config import resolve_level, setup_logging
from src.config.settings import Settings
from src.core.entities.experiment import ExperimentConfig
from src.core.exceptions import ConfigurationError


class TestSettings:

    def test_defaults(self, monkeypatch):
        for name in ('WA_RADIUS', 'GRID_POINTS', 'BROMWICH_TERMS'):
            monkeypatch.delenv(name, raising=False)
        current = Settings(_env_file=None)
        assert current.wa_radius == 0.9995
        assert current.grid_points == 4097
        assert current.bromwich_terms == 20000

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv('WA_RADIUS', '0.999')
        monkeypatch.setenv('grid_points', '513')
        current = Settings(_env_file=None)
        assert current.wa_radius == 0.999
        assert current.grid_points == 513


class TestLogging:

    def test_resolve_level(self):
        assert resolve_level(True, "WARNING") == "DEBUG"
        assert resolve_level(False, "warning") == "WARNING"

    def test_records_and_warnings_go_to_stream(self):
        stream = io.StringIO()
        setup_logging(level="INFO", stream=stream)
        try:
            logging.getLogger("src.test").info("coefficients ready")
            logging.getLogger("src.test").debug("hidden")
            with warnings.catch_warnings():
                warnings.simplefilter("always")
                warnings.warn("overflow in r**-k", RuntimeWarning)
        finally:
            logging.captureWarnings(False)
            logging.getLogger().handlers.clear()

        text = stream.getvalue()
        assert "src.test - INFO" in text
        assert "hidden" not in text
        assert "overflow in r**-k" in text

    def test_repeated_setup_recaptures_warnings(self, monkeypatch):
        original = warnings.showwarning
        setup_logging(level="INFO", stream=io.StringIO())
        # something else (a test runner) restores the stock hook
        monkeypatch.setattr(warnings, "showwarning", original)

        stream = io.StringIO()
        setup_logging(level="INFO", stream=stream)
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("always")
                warnings.warn("divide by zero in log10", RuntimeWarning)
        finally:
            logging.captureWarnings(False)
            logging.getLogger().handlers.clear()

        assert "divide by zero in log10" in stream.getvalue()


class TestExperimentConfig:

    def test_interval_string(self):
        config = ExperimentConfig(method='cos', terms=8, interval='-1,2')
        assert config.interval == (-1.0, 2.0)

    def test_string_values_are_coerced(self):
        config = ExperimentConfig.from_options({'function': 'f2', 'order': '1', 'scale': '5', 'alpha': '500'})
        assert (config.order, config.scale) == (1, 5)
        assert config.params() == {'alpha': 500.0}

    def test_none_values_are_dropped(self):
        config = ExperimentConfig.from_options({'method': 'cos', 'terms': 16, 'order': None, 'grid': None})
        assert config.order is None
        assert config.grid >= 2

    @pytest.mark.parametrize("options", [
        {'method': 'wa', 'order': 1},
        {'method': 'cos'},
        {'method': 'wa', 'order': 1, 'scale': 2, 'radius': 1.0},
        {'method': 'cos', 'terms': 8, 'interval': '2,1'},
        {'method': 'cos', 'terms': 8, 'interval': '1,2,3'},
        {'method': 'cos', 'terms': 8, 'colour': 'blue'},
        {'method': 'spline'},
    ])
    def test_invalid(self, options):
        with pytest.raises(ConfigurationError):
            ExperimentConfig.from_options(options)

    def test_to_dict(self):
        data = ExperimentConfig(method='wa', order=1, scale=2, interval=(0.0, 2.0)).to_dict()
        assert data['interval'] == [0.0, 2.0]
        assert data['rule'] == 'standard'
