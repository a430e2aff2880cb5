"""Fan-beam acquisition geometry and the sinogram container.

Coordinate conventions used throughout the toolkit:

* The field of view is the unit circle.
* A parallel ray ``(theta, s)`` is the line ``{p : p . (cos theta, sin theta) = s}``.
* The fan source for projection angle ``beta`` sits at
  ``source_radius * (-sin beta, cos beta)``; a detector channel at fan angle
  ``gamma`` measures the parallel ray ``theta = beta + gamma``,
  ``s = source_radius * sin gamma``.

The source-angle origin on the +y axis is what makes the ``theta = beta + gamma``
identity hold with the ``(cos theta, sin theta)`` ray normal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .errors import ConfigurationError, DataError

#: default detector coverage, slightly past the unit field of view.
DEFAULT_COVERAGE = 1.05


@dataclass(frozen=True)
class ScanGeometry:
    """Equiangular fan-beam scan description.

    Parameters
    ----------
    n_angles : int
        Number of source angles per turn (rows of the sinogram).
    n_detectors : int
        Number of detector channels on the arc (columns of the sinogram).
    source_radius : float
        Distance from rotation centre to source, in field-of-view units.
    fan_half_angle : float, optional
        Half aperture of the fan in radians.  Defaults to the aperture whose
        parallel-offset coverage is ``DEFAULT_COVERAGE`` (slightly more than
        the unit circle).
    angular_range : float
        Angular span of the source trajectory; a full turn by default.
    """

    n_angles: int = 1000
    n_detectors: int = 144
    source_radius: float = 3.0
    fan_half_angle: Optional[float] = None
    angular_range: float = 2.0 * math.pi

    def __post_init__(self):
        if self.fan_half_angle is None:
            if self.source_radius <= DEFAULT_COVERAGE:
                raise ConfigurationError(
                    f"source_radius {self.source_radius} too small for default fan"
                )
            object.__setattr__(
                self, "fan_half_angle", math.asin(DEFAULT_COVERAGE / self.source_radius)
            )
        self.validate()

    def validate(self) -> None:
        if self.n_angles < 1:
            raise ConfigurationError("n_angles must be >= 1")
        if self.n_detectors < 2:
            raise ConfigurationError("n_detectors must be >= 2")
        if self.source_radius <= 0:
            raise ConfigurationError("source_radius must be positive")
        if not 0 < self.fan_half_angle < math.pi / 2:
            raise ConfigurationError("fan_half_angle must lie in (0, pi/2)")
        if self.coverage < 1.0:
            raise ConfigurationError(
                "fan does not cover the unit field of view: "
                f"source_radius*sin(fan_half_angle) = {self.coverage:.4f} < 1"
            )
        if self.angular_range <= 0:
            raise ConfigurationError("angular_range must be positive")

    @property
    def coverage(self) -> float:
        """Largest parallel offset |s| reached by the fan."""
        return self.source_radius * math.sin(self.fan_half_angle)

    @property
    def full_turn(self) -> bool:
        return math.isclose(self.angular_range, 2.0 * math.pi, rel_tol=1e-9)

    def betas(self) -> np.ndarray:
        """Source angles, uniform, without the endpoint (the scan wraps)."""
        return np.arange(self.n_angles) * (self.angular_range / self.n_angles)

    def gammas(self) -> np.ndarray:
        """Detector fan angles, uniform and endpoint-inclusive."""
        return np.linspace(-self.fan_half_angle, self.fan_half_angle, self.n_detectors)

    def source_position(self, beta: float) -> np.ndarray:
        return self.source_radius * np.array([-math.sin(beta), math.cos(beta)])

    def ray_direction(self, beta: float, gamma: float) -> np.ndarray:
        """Unit direction of the ray leaving the source at fan angle gamma."""
        phi = beta + math.pi / 2 + gamma  # direction angle of the central ray, tilted
        return -np.array([math.cos(phi), math.sin(phi)])

    def to_dict(self) -> dict:
        return {
            "n_angles": self.n_angles,
            "n_detectors": self.n_detectors,
            "source_radius": self.source_radius,
            "fan_half_angle": self.fan_half_angle,
            "angular_range": self.angular_range,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ScanGeometry":
        return cls(**d)


@dataclass(frozen=True)
class SinoMeta:
    """Provenance attached to a sinogram: configuration label and sample index."""

    label: str = ""
    plane: str = ""
    position: str = ""
    sample_index: int = -1

    def with_sample(self, index: int) -> "SinoMeta":
        return replace(self, sample_index=index)


@dataclass
class Sinogram:
    """2D grid of attenuation line integrals, angles x detector channels."""

    data: np.ndarray
    geometry: ScanGeometry
    meta: SinoMeta = field(default_factory=SinoMeta)

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=np.float64)
        self.validate()

    def validate(self) -> None:
        expected = (self.geometry.n_angles, self.geometry.n_detectors)
        if self.data.shape != expected:
            raise DataError(
                f"sinogram shape {self.data.shape} does not match geometry {expected}"
            )
        if not np.all(np.isfinite(self.data)):
            raise DataError("sinogram contains non-finite values")

    @property
    def shape(self) -> tuple:
        return self.data.shape

    def copy_with(self, data: np.ndarray) -> "Sinogram":
        return Sinogram(data=np.array(data, dtype=np.float64), geometry=self.geometry, meta=self.meta)


def as_array(sino) -> np.ndarray:
    """Accept either a Sinogram or a bare array and return float64 data."""
    if isinstance(sino, Sinogram):
        return sino.data
    return np.asarray(sino, dtype=np.float64)
