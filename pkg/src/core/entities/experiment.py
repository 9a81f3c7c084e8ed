"""
Experiment configuration entity.
"""
from pathlib import Path
from typing import Any, Dict, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError as PydanticValidationError
from pydantic import field_validator, model_validator

from ...config.settings import settings
from ..exceptions import ConfigurationError


class ExperimentConfig(BaseModel):
    """
    One inversion experiment: function, method and evaluation grid.

    Attributes:
        function: Catalog name (f1 ... f5, or exp/one for Laplace functions)
        alpha: f2 decay rate
        sigma: f5 standard deviation
        method: wa, cos or bromwich
        order: B-spline order j (wa)
        scale: Scale m (wa)
        terms: Series length N (cos) or Bromwich terms
        interval: Override of the natural interval
        radius: Circle radius r (wa)
        panels: Trapezoid panels M (wa, default (j+1) 2^m)
        rule: Coefficient rule (wa)
        beta: Laplace damping (wa on a Laplace function)
        grid: Evaluation grid size
        out: Report path
        format: Report format
    """
    model_config = ConfigDict(extra='forbid')

    function: str = 'f2'
    alpha: Optional[float] = Field(default=None, gt=0)
    sigma: Optional[float] = Field(default=None, gt=0)
    method: Literal['wa', 'cos', 'bromwich'] = 'wa'
    order: Optional[int] = Field(default=None, ge=0)
    scale: Optional[int] = Field(default=None, ge=1)
    terms: Optional[int] = Field(default=None, ge=0)
    interval: Optional[Tuple[float, float]] = None
    radius: float = Field(default_factory=lambda: settings.wa_radius, gt=0)
    panels: Optional[int] = Field(default=None, ge=2)
    rule: Literal['standard', 'fast', 'optimal'] = 'standard'
    beta: float = 0.0
    grid: int = Field(default_factory=lambda: settings.grid_points, ge=2)
    out: Optional[Path] = None
    format: Literal['csv', 'json'] = 'csv'

    @field_validator('interval', mode='before')
    @classmethod
    def parse_interval(cls, value):
        """Accept 'a,b' strings."""
        if isinstance(value, str):
            parts = value.split(',')
            if len(parts) != 2:
                raise ValueError(f"interval must be 'a,b', got '{value}'")
            return tuple(float(p) for p in parts)
        return value

    @model_validator(mode='after')
    def check_method_fields(self) -> "ExperimentConfig":
        """Method-specific fields must be present."""
        if self.method == 'wa' and (self.order is None or self.scale is None):
            raise ValueError("method 'wa' requires order and scale")
        if self.method == 'cos' and not self.terms:
            raise ValueError("method 'cos' requires terms >= 1")
        if self.radius == 1.0:
            raise ValueError("radius must differ from 1")
        if self.interval is not None and self.interval[0] >= self.interval[1]:
            raise ValueError(f"interval must satisfy a < b, got {self.interval}")
        return self

    @classmethod
    def from_options(cls, options: Dict[str, Any]) -> "ExperimentConfig":
        """
        Build a config from CLI/config-file options (None values are dropped).

        Raises:
            ConfigurationError: On invalid or missing options
        """
        values = {k: v for k, v in options.items() if v is not None}
        try:
            return cls(**values)
        except PydanticValidationError as e:
            raise ConfigurationError(f"invalid experiment configuration: {e}") from e

    def params(self) -> Dict[str, float]:
        """Catalog parameters."""
        return {k: v for k, v in (('alpha', self.alpha), ('sigma', self.sigma)) if v is not None}

    def to_dict(self) -> dict:
        return self.model_dump(mode='json')
