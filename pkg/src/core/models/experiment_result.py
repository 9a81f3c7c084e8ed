"""
Experiment result model.
"""
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Callable, Dict, Optional

from .error_report import ErrorReport


@dataclass
class ExperimentResult:
    """
    Outcome of one inversion experiment.

    Attributes:
        function: Catalog name
        method_label: WAi-j, COS-N or BROMWICH
        report: Grid error report
        approximation: Callable reconstruction (expansion object or closure)
        execution_time: Inversion plus evaluation time in seconds
        config: Experiment configuration as a dictionary
        timestamp: When the experiment ran
    """
    function: str
    method_label: str
    report: ErrorReport
    approximation: Callable
    execution_time: float = 0.0
    config: Dict[str, Any] = field(default_factory=dict)
    timestamp: Optional[datetime] = None

    def __post_init__(self):
        if self.timestamp is None:
            self.timestamp = datetime.now()

    @property
    def coefficients(self):
        """Coefficient vector when the approximation is an expansion."""
        expansion = getattr(self.approximation, 'expansion', self.approximation)
        return getattr(expansion, 'coeffs', None)

    def to_dict(self) -> dict:
        return {
            'function': self.function,
            'method_label': self.method_label,
            'execution_time': self.execution_time,
            'timestamp': self.timestamp.isoformat(),
            'config': self.config,
            'report': self.report.to_dict(include_points=False)
        }
