"""
Centralized application settings using Pydantic.
"""
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field
from typing import Optional
from pathlib import Path


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"  # Ignore extra environment variables
    )

    # Wavelet approximation (WA) defaults
    wa_radius: float = Field(default=0.9995, description="Circle radius r of the Cauchy integral", gt=0)
    wa_eta: float = Field(default=16.0, description="Decimal digits of working precision", gt=0)
    stability_epsilon: float = Field(
        default=0.05,
        description="Warn when |r - 1| exceeds this empirical stability threshold",
        gt=0
    )

    # COS and Bromwich baselines
    cos_terms: int = Field(default=64, description="Default number of COS terms", ge=1)
    bromwich_terms: int = Field(default=20000, description="Default Bromwich series length", ge=0)

    # Diagnostics
    grid_points: int = Field(default=4097, description="Uniform evaluation grid size", ge=2)

    # Infrastructure
    output_dir: Path = Field(default=Path("results"), description="Output directory for reports")
    log_level: str = Field(default="INFO", description="Logging level")
    log_file: Optional[Path] = Field(default=None, description="Log file path")

    # Application
    app_name: str = Field(default="B-spline Transform Inversion", description="Application name")
    app_version: str = Field(default="1.0.0", description="Application version")


# Global settings instance
settings = Settings()
