"""
MirrorEnt Configuration Settings
Type-safe configuration management using Pydantic Settings
"""
from typing import List, Tuple
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application configuration settings loaded from environment variables.
    All settings are immutable and validated at startup.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        frozen=True,
    )

    # ========================================================================
    # APPLICATION SETTINGS
    # ========================================================================
    app_name: str = Field(default="MirrorEnt", description="Application name")
    app_version: str = Field(default="1.0.0", description="Application version")
    environment: str = Field(default="development", description="Environment: development, staging, production")

    # ========================================================================
    # LOGGING
    # ========================================================================
    log_level: str = Field(default="WARNING", description="Logging level")
    log_format: str = Field(default="console", description="Log format: json or console")
    show_error_details: bool = Field(default=False, description="Include tracebacks in failure logs")

    # ========================================================================
    # SWEEPS
    # ========================================================================
    sweep_workers: int = Field(default=1, ge=1, description="Worker processes for grid sweeps")
    sweep_default_count: int = Field(default=200, ge=2, description="Default points per sweep axis")
    sweep_default_min: float = Field(default=0.05, gt=0, description="Default lower bound of both sweep axes")
    sweep_default_max: float = Field(default=20.0, gt=0, description="Default upper bound of both sweep axes")

    # ========================================================================
    # NUMERICS
    # ========================================================================
    quad_t_max: float = Field(default=200.0, gt=0, description="Time horizon of the Fourier oracle (1/omega0)")
    quad_abs_tol: float = Field(default=1e-6, gt=0, description="Absolute tolerance of the oracles")
    quad_rel_tol: float = Field(default=1e-6, gt=0, description="Relative tolerance of the oracles")
    quad_angular_nodes: str = Field(default="64x128", description="Polar x azimuthal nodes of the sphere rule")
    quad_max_refinements: int = Field(default=2, ge=0, description="Extra order or cutoff doublings of the adaptive oracles")

    # ========================================================================
    # VALIDATION
    # ========================================================================
    validation_grid: str = Field(default="0.5,1,2,5,10", description="Comma-separated R and Z values of the validation grid")
    validation_tolerance: float = Field(default=1e-4, gt=0, description="Pairwise absolute tolerance in units of gamma0")
    shift_tolerance: float = Field(default=0.01, gt=0, description="Relative tolerance of the dipole-shift check")

    # ========================================================================
    # VALIDATORS
    # ========================================================================
    @field_validator("environment")
    @classmethod
    def validate_environment(cls, v: str) -> str:
        """Validate environment value"""
        allowed = ["development", "staging", "production"]
        if v not in allowed:
            raise ValueError(f"environment must be one of {allowed}")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level"""
        allowed = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        v_upper = v.upper()
        if v_upper not in allowed:
            raise ValueError(f"log_level must be one of {allowed}")
        return v_upper

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        """Validate log format"""
        allowed = ["json", "console"]
        if v not in allowed:
            raise ValueError(f"log_format must be one of {allowed}")
        return v

    @field_validator("quad_angular_nodes")
    @classmethod
    def validate_angular_nodes(cls, v: str) -> str:
        """Validate the NxM node string"""
        parts = v.lower().split("x")
        if len(parts) != 2 or not all(p.strip().isdigit() and int(p) > 0 for p in parts):
            raise ValueError("quad_angular_nodes must look like 64x128")
        return v.lower()

    # ========================================================================
    # COMPUTED PROPERTIES
    # ========================================================================
    @property
    def angular_nodes(self) -> Tuple[int, int]:
        """Parse the polar x azimuthal node string"""
        n_theta, n_phi = self.quad_angular_nodes.split("x")
        return int(n_theta), int(n_phi)

    @property
    def validation_grid_values(self) -> List[float]:
        """Parse comma-separated validation grid values"""
        return [float(v.strip()) for v in self.validation_grid.split(",") if v.strip()]


# ============================================================================
# GLOBAL SETTINGS INSTANCE
# ============================================================================
settings = Settings()
