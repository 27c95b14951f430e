"""
Centralized configuration management for elliptio
"""

import os
from typing import Optional, Dict, Any
from dataclasses import dataclass, field, asdict
from functools import lru_cache
import logging

import orjson

logger = logging.getLogger(__name__)


@dataclass
class PrecisionConfig:
    """Truncation and snapping tolerances for infinite products"""
    product_tol: float = field(default_factory=lambda: float(os.getenv("ELLIPTIO_PRODUCT_TOL", "1e-15")))
    max_terms: int = field(default_factory=lambda: int(os.getenv("ELLIPTIO_MAX_TERMS", "4096")))
    zero_snap: float = field(default_factory=lambda: float(os.getenv("ELLIPTIO_ZERO_SNAP", "1e-13")))
    pole_snap: float = field(default_factory=lambda: float(os.getenv("ELLIPTIO_POLE_SNAP", "1e-12")))

    # Incommensurability guard for period lattices
    lattice_guard: float = field(default_factory=lambda: float(os.getenv("ELLIPTIO_LATTICE_GUARD", "1e-10")))
    lattice_scan: int = field(default_factory=lambda: int(os.getenv("ELLIPTIO_LATTICE_SCAN", "8")))

    # Switch from a direct product to a sum of logs above this many factors
    log_sum_threshold: int = field(default_factory=lambda: int(os.getenv("ELLIPTIO_LOG_SUM_THRESHOLD", "200")))


@dataclass
class QuadratureConfig:
    """Torus and contour quadrature settings"""
    tol: float = field(default_factory=lambda: float(os.getenv("ELLIPTIO_QUAD_TOL", "1e-11")))
    n0: int = field(default_factory=lambda: int(os.getenv("ELLIPTIO_QUAD_N0", "16")))
    nmax_1d: int = field(default_factory=lambda: int(os.getenv("ELLIPTIO_QUAD_NMAX_1D", "4096")))
    nmax_2d: int = field(default_factory=lambda: int(os.getenv("ELLIPTIO_QUAD_NMAX_2D", "512")))
    nmax_3d: int = field(default_factory=lambda: int(os.getenv("ELLIPTIO_QUAD_NMAX_3D", "128")))
    screen_margin: float = field(default_factory=lambda: float(os.getenv("ELLIPTIO_SCREEN_MARGIN", "0.02")))
    workers: int = field(default_factory=lambda: int(os.getenv("ELLIPTIO_QUAD_WORKERS", "1")))

    # Hyperbolic gamma contour
    contour_radius: float = field(default_factory=lambda: float(os.getenv("ELLIPTIO_CONTOUR_RADIUS", "1.0")))
    gl_points: int = field(default_factory=lambda: int(os.getenv("ELLIPTIO_GL_POINTS", "64")))
    max_panel_doublings: int = field(default_factory=lambda: int(os.getenv("ELLIPTIO_MAX_PANEL_DOUBLINGS", "8")))

    def nmax_for(self, dimension: int) -> int:
        """Per-dimension point cap for a torus of the given dimension"""
        return {1: self.nmax_1d, 2: self.nmax_2d}.get(dimension, self.nmax_3d)


@dataclass
class VerifyConfig:
    """Seeded sampling for verification suites"""
    seed: int = field(default_factory=lambda: int(os.getenv("ELLIPTIO_SEED", "20240601")))
    resample_limit: int = field(default_factory=lambda: int(os.getenv("ELLIPTIO_RESAMPLE_LIMIT", "8")))
    modulus_low: float = field(default_factory=lambda: float(os.getenv("ELLIPTIO_SAMPLE_MODULUS_LOW", "0.4")))
    modulus_high: float = field(default_factory=lambda: float(os.getenv("ELLIPTIO_SAMPLE_MODULUS_HIGH", "0.9")))


@dataclass
class AccelConfig:
    """Optional JIT acceleration"""
    use_numba: bool = field(default_factory=lambda: os.getenv("ELLIPTIO_USE_NUMBA", "true").lower() == "true")


@dataclass
class LoggingConfig:
    """Logging configuration settings"""
    level: str = field(default_factory=lambda: os.getenv("LOG_LEVEL", "WARNING"))
    format: str = field(default_factory=lambda: os.getenv("LOG_FORMAT", "%(asctime)s - %(name)s - %(levelname)s - %(message)s"))
    log_file: Optional[str] = field(default_factory=lambda: os.getenv("LOG_FILE"))


@dataclass
class ApplicationConfig:
    """Main application configuration"""
    app_name: str = field(default_factory=lambda: os.getenv("APP_NAME", "elliptio"))
    app_version: str = field(default_factory=lambda: os.getenv("APP_VERSION", "0.1.0"))

    precision: PrecisionConfig = field(default_factory=PrecisionConfig)
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    accel: AccelConfig = field(default_factory=AccelConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    def __post_init__(self):
        """Validate configuration after initialization"""
        self.validate()

    def validate(self):
        """Validate configuration settings"""
        errors = []

        # Precision validation
        if self.precision.product_tol <= 0:
            errors.append("product_tol must be positive")
        if self.precision.max_terms < 8:
            errors.append("max_terms must be at least 8")
        if self.precision.zero_snap <= 0 or self.precision.pole_snap <= 0:
            errors.append("snap tolerances must be positive")
        if self.precision.lattice_scan < 1:
            errors.append("lattice_scan must be at least 1")

        # Quadrature validation
        if self.quadrature.tol <= 0:
            errors.append("quadrature tol must be positive")
        if self.quadrature.n0 < 2:
            errors.append("quadrature n0 must be at least 2")
        for name in ("nmax_1d", "nmax_2d", "nmax_3d"):
            if getattr(self.quadrature, name) < self.quadrature.n0:
                errors.append(f"{name} must not be below n0")
        if not 0 < self.quadrature.screen_margin < 1:
            errors.append("screen_margin must be between 0 and 1")
        if self.quadrature.workers < 1:
            errors.append("workers must be at least 1")
        if self.quadrature.contour_radius <= 0:
            errors.append("contour_radius must be positive")
        if self.quadrature.gl_points < 2:
            errors.append("gl_points must be at least 2")

        # Sampling validation
        if not 0 < self.verify.modulus_low < self.verify.modulus_high < 1:
            errors.append("sample modulus window must satisfy 0 < low < high < 1")
        if self.verify.resample_limit < 1:
            errors.append("resample_limit must be at least 1")

        # Logging validation
        valid_log_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if self.logging.level.upper() not in valid_log_levels:
            errors.append(f"Invalid log level: {self.logging.level}. Must be one of {valid_log_levels}")

        if errors:
            error_msg = f"Configuration validation failed: {'; '.join(errors)}"
            logger.error(error_msg)
            raise ValueError(error_msg)

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary"""
        return asdict(self)


@lru_cache(maxsize=1)
def get_config() -> ApplicationConfig:
    """
    Get application configuration (singleton pattern)

    Returns:
        ApplicationConfig instance
    """
    return ApplicationConfig()


def load_config_from_file(config_path: str) -> ApplicationConfig:
    """
    Load configuration from a JSON file, overlaying the environment defaults

    Args:
        config_path: Path to a JSON document whose top-level keys name config sections

    Returns:
        ApplicationConfig instance
    """
    config = ApplicationConfig()

    if not os.path.exists(config_path):
        logger.warning(f"Config file not found: {config_path}, using environment defaults")
        return config

    with open(config_path, "rb") as f:
        overrides = orjson.loads(f.read())

    for section_name, values in overrides.items():
        section = getattr(config, section_name, None)
        if section is None:
            raise ValueError(f"Unknown configuration section: {section_name}")
        if not isinstance(values, dict):
            setattr(config, section_name, values)
            continue
        for key, value in values.items():
            if not hasattr(section, key):
                raise ValueError(f"Unknown configuration key: {section_name}.{key}")
            setattr(section, key, value)

    config.validate()
    logger.info(f"Configuration loaded from {config_path}")
    return config

