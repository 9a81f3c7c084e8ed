"""
Run experiment use case - orchestrates catalog, inversion engines and diagnostics.
"""
from pathlib import Path
from time import time
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ...config.logging_config import get_logger
from ...config.settings import settings
from ...core.entities.experiment import ExperimentConfig
from ...core.exceptions import ConfigurationError, SplineInversionError
from ...core.interfaces.inverter import ISpectralInverter
from ...core.models.experiment_result import ExperimentResult
from ...core.models.quadrature import QuadratureConfig
from ...core.models.spline_spec import SplineSpec
from ...infrastructure.reporting.report_writer import (
    emit_json,
    emit_rows,
    format_table,
    write_bytes,
    write_report,
)
from ...infrastructure.repositories.transform_catalog import (
    LAPLACE_FUNCTIONS,
    TransformCatalog,
    laplace_catalog,
)
from ...services.cos_method import CosInverterService
from ...services.error_metrics import error_grid
from ...services.laplace_inversion import bromwich_defaults, bromwich_trapezoid, invert_laplace
from ...services.wavelet_inversion import WaveletInverterService, error_budget

logger = get_logger(__name__)

BROMWICH_INTERVAL = (0.5, 3.0)
LAPLACE_WA_INTERVAL = (0.0, 8.0)

PREFACTOR_RADII = (
    0.9, 0.91, 0.92, 0.93, 0.94, 0.95, 0.96, 0.97, 0.98, 0.99,
    0.999, 0.9991, 0.9993, 0.9995, 0.9997, 0.9999
)
PREFACTOR_SCALES = (8, 9, 10)

# (method, order or terms, scale) rows of the error tables
EXP_ROWS = (
    ('wa', 0, 6), ('wa', 1, 5), ('wa', 1, 9), ('wa', 2, 4),
    ('cos', 64, None), ('cos', 128, None), ('cos', 256, None), ('cos', 512, None), ('cos', 1024, None)
)
EXP_ALPHAS = (50.0, 500.0)
GAUSS_ROWS = (('wa', 0, 6), ('wa', 1, 5), ('wa', 2, 4), ('cos', 32, None), ('cos', 64, None))
GAUSS_SIGMA = 0.1

TABLES = ('prefactor', 'exp_errors', 'gauss_errors')


def prefactor(radius: float, scale: int) -> float:
    """(M r^k)^{-1} for M = 2^m and k = 2^m - 1 (Haar)."""
    spec = SplineSpec(order=0, scale=scale, interval=(0.0, 1.0))
    quadrature = QuadratureConfig(radius=radius, panels=2 ** scale)
    return error_budget(spec, quadrature, spec.max_index()).prefactor


def _row_config(row: Tuple, **fields) -> ExperimentConfig:
    method, size, scale = row
    if method == 'wa':
        return ExperimentConfig(method='wa', order=size, scale=scale, **fields)
    return ExperimentConfig(method='cos', terms=size, **fields)


class RunExperimentUseCase:
    """
    Use case for transform-inversion experiments.
    Coordinates catalog lookup, inversion, error measurement and output files.
    """

    def __init__(self, catalog: Optional[TransformCatalog] = None, output_dir: Optional[Path] = None):
        """
        Initialize use case.

        Args:
            catalog: Test-function repository
            output_dir: Directory for output files (default from settings)
        """
        self.catalog = catalog or TransformCatalog()
        self.output_dir = Path(output_dir or settings.output_dir)

    def _inverter(self, config: ExperimentConfig) -> ISpectralInverter:
        if config.method == 'wa':
            return WaveletInverterService(
                order=config.order,
                scale=config.scale,
                radius=config.radius,
                panels=config.panels,
                rule=config.rule
            )
        return CosInverterService(n_terms=config.terms)

    def _run(self, config: ExperimentConfig, keep_points: bool = True) -> ExperimentResult:
        start_time = time()

        if config.method == 'bromwich':
            bridge, reference, growth = laplace_catalog(config.function)
            interval = config.interval or BROMWICH_INTERVAL
            sigma, h = bromwich_defaults(interval[1], growth)
            n_terms = settings.bromwich_terms if config.terms is None else config.terms
            label = "BROMWICH"

            def approximation(x):
                return bromwich_trapezoid(bridge, sigma, h, x, n_terms)

        elif config.function in LAPLACE_FUNCTIONS:
            if config.method != 'wa':
                raise ConfigurationError(
                    f"Laplace function '{config.function}' needs method 'wa' or 'bromwich', got '{config.method}'"
                )
            bridge, reference, _ = laplace_catalog(config.function, beta=config.beta)
            interval = config.interval or LAPLACE_WA_INTERVAL
            spec = SplineSpec(order=config.order, scale=config.scale, interval=interval)
            quadrature = QuadratureConfig(
                radius=config.radius, panels=config.panels or spec.default_panels(), eta=settings.wa_eta
            )
            approximation = invert_laplace(bridge, spec, quadrature)
            label = spec.label()

        else:
            entry = self.catalog.get(config.function, config.params())
            interval = config.interval or entry.natural_interval
            inverter = self._inverter(config)
            logger.debug(f"Inverter: {inverter.describe()}")
            approximation = inverter.invert(entry.transform, interval)
            reference = entry.evaluate
            label = inverter.get_method_label()

        report = error_grid(
            approximation, reference, interval, config.grid, method_label=label, keep_points=keep_points
        )
        report.metadata.update({'function': config.function, 'params': config.params()})

        execution_time = time() - start_time
        logger.info(f"{config.function}: {report.summary_line()} ({execution_time:.2f}s)")

        return ExperimentResult(
            function=config.function,
            method_label=label,
            report=report,
            approximation=approximation,
            execution_time=execution_time,
            config=config.to_dict()
        )

    def execute_invert(self, config: ExperimentConfig, save_results: bool = True) -> ExperimentResult:
        """
        Invert one catalog function and measure the reconstruction error.

        Args:
            config: Experiment configuration
            save_results: Whether to write the report (and wa coefficients)

        Returns:
            Experiment result
        """
        logger.info(f"Executing inversion: {config.method} on {config.function}")
        try:
            result = self._run(config)
        except SplineInversionError as e:
            logger.error(f"Inversion of {config.function} failed: {e}")
            raise

        if save_results:
            self._save_results(result, config)
        return result

    def execute_table(self, which: str, save_results: bool = True) -> Tuple[List[str], List[list]]:
        """
        Regenerate a prefactor or error table.

        Args:
            which: prefactor, exp_errors or gauss_errors
            save_results: Whether to write <which>.csv

        Returns:
            (header, rows)
        """
        if which not in TABLES:
            raise ConfigurationError(f"unknown table '{which}', expected one of {TABLES}")

        logger.info(f"Building table {which}")
        if which == 'prefactor':
            header = ['r'] + [f"m={m}" for m in PREFACTOR_SCALES]
            rows = [[r] + [prefactor(r, m) for m in PREFACTOR_SCALES] for r in PREFACTOR_RADII]
        elif which == 'exp_errors':
            header = ['method', 'alpha', 'min_log10', 'max_log10']
            rows = []
            for alpha in EXP_ALPHAS:
                for row in EXP_ROWS:
                    report = self._run(_row_config(row, function='f2', alpha=alpha), keep_points=False).report
                    rows.append([report.method_label, alpha, report.min_log10_abs_error, report.max_log10_abs_error])
        else:
            header = ['method', 'min_log10', 'max_log10']
            rows = []
            for row in GAUSS_ROWS:
                report = self._run(_row_config(row, function='f5', sigma=GAUSS_SIGMA), keep_points=False).report
                rows.append([report.method_label, report.min_log10_abs_error, report.max_log10_abs_error])

        if save_results:
            write_bytes(self.output_dir / f"{which}.csv", emit_rows(header, rows))
        return header, rows

    def execute_sweep(
        self,
        config: ExperimentConfig,
        r_min: float,
        r_max: float,
        steps: int,
        save_results: bool = True
    ) -> List[Tuple[float, float, float]]:
        """
        Log-error surface over (r, x) for the WA method.

        Args:
            config: WA experiment configuration (its radius is ignored)
            r_min: Smallest radius
            r_max: Largest radius
            steps: Number of radii (1 gives r_min only)
            save_results: Whether to write the CSV

        Returns:
            Rows (r, x, log10_abs_error); exact points give -inf
        """
        if config.method != 'wa':
            raise ConfigurationError("sweep-r requires method 'wa'")
        if steps < 1 or not 0 < r_min or (steps > 1 and not r_min < r_max):
            raise ConfigurationError(f"invalid sweep 0 < r_min < r_max with steps >= 1: {r_min}, {r_max}, {steps}")

        radii = [r for r in np.linspace(r_min, r_max, steps) if abs(r - 1.0) > 1e-12]
        if not radii:
            raise ConfigurationError("sweep grid contains only r = 1")

        rows = []
        for r in radii:
            result = self._run(config.model_copy(update={'radius': float(r)}))
            points = result.report.per_point
            with np.errstate(divide='ignore'):
                logs = np.log10(points.abs_error)
            rows.extend((float(r), float(x), float(e)) for x, e in zip(points.x, logs))

        if save_results:
            label = f"WA{config.order}-{config.scale}"
            path = config.out or self.output_dir / f"sweep_{label}_{config.function}.csv"
            write_bytes(Path(path), emit_rows(['r', 'x', 'log10_abs_error'], rows))
        return rows

    def _save_results(self, result: ExperimentResult, config: ExperimentConfig):
        """Save report and coefficients to files."""
        path = Path(config.out or self.output_dir / f"{result.method_label}_{result.function}.{config.format}")
        write_report(result.report, path, config.format)

        if config.method == 'wa':
            expansion = getattr(result.approximation, 'expansion', result.approximation)
            coeff_path = path.with_name(f"{path.stem}_coefficients.{config.format}")
            if config.format == 'json':
                payload = emit_json(expansion.to_dict())
            else:
                payload = emit_rows(['k', 'coefficient'], enumerate(expansion.coeffs.tolist()))
            write_bytes(coeff_path, payload)


def render_table(header: Sequence[str], rows: List[list]) -> str:
    """Console rendering with scientific notation for numbers."""
    return format_table(header, rows, float_format="{:.4e}")
