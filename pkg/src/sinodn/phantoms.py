"""Disk-composite calibration phantoms.

A phantom is a list of disks with signed attenuation coefficients; annuli are
composed as a large positive disk plus a negative inner disk.  The default
set mimics a static calibration object: ring-and-spoke layouts that differ in
spoke count and placement between detector planes and positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigurationError

_INSIDE_TOL = 1e-9


@dataclass(frozen=True)
class Disk:
    """Homogeneous disk: centre (field-of-view units), radius, attenuation mu."""

    cx: float
    cy: float
    radius: float
    mu: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ConfigurationError("disk radius must be positive")
        if math.hypot(self.cx, self.cy) + self.radius > 1.0 + _INSIDE_TOL:
            raise ConfigurationError(
                f"disk at ({self.cx:.3f}, {self.cy:.3f}) r={self.radius:.3f} "
                "extends outside the unit field of view"
            )


@dataclass(frozen=True)
class Phantom:
    """Composite of disks; overlapping mus add.

    The composite attenuation must be non-negative everywhere, which
    ``validate`` checks on a dense sample grid.
    """

    disks: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "disks", tuple(self.disks))

    def validate(self, grid: int = 256) -> None:
        if not self.disks:
            return
        xs = np.linspace(-1.0, 1.0, grid)
        mu = self.rasterize(grid)
        if mu.min() < -1e-9:
            i, j = np.unravel_index(np.argmin(mu), mu.shape)
            raise ConfigurationError(
                f"composite attenuation negative ({mu.min():.3g}) near "
                f"({xs[j]:.3f}, {xs[i]:.3f})"
            )

    def rasterize(self, size: int, endpoint: bool = True) -> np.ndarray:
        """Sample the composite attenuation on a size x size grid over [-1, 1]^2.

        Row index is y, column index is x, both increasing with the coordinate.
        """
        if endpoint:
            coords = np.linspace(-1.0, 1.0, size)
        else:
            coords = (np.arange(size) + 0.5) / size * 2.0 - 1.0
        x = coords[None, :]
        y = coords[:, None]
        mu = np.zeros((size, size))
        for d in self.disks:
            mu += d.mu * ((x - d.cx) ** 2 + (y - d.cy) ** 2 <= d.radius**2)
        return mu

    def scaled(self, factor: float) -> "Phantom":
        return Phantom(tuple(Disk(d.cx, d.cy, d.radius, d.mu * factor) for d in self.disks))


def annulus(cx: float, cy: float, outer: float, inner: float, mu: float) -> list:
    """Ring of attenuation mu: positive outer disk plus cancelling inner disk."""
    if not 0 < inner < outer:
        raise ConfigurationError("annulus requires 0 < inner < outer")
    return [Disk(cx, cy, outer, mu), Disk(cx, cy, inner, -mu)]


def ring_and_spokes(
    n_spokes: int,
    spoke_radius: float = 0.055,
    spoke_ring: float = 0.52,
    phase: float = 0.0,
    ring_mu: float = 0.8,
    core_mu: float = 1.0,
    spoke_mu: float = 0.9,
) -> Phantom:
    """Calibration-style layout: outer ring, central core, spokes on a circle."""
    disks = annulus(0.0, 0.0, 0.88, 0.80, ring_mu)
    disks.append(Disk(0.0, 0.0, 0.16, core_mu))
    for k in range(n_spokes):
        ang = phase + 2.0 * math.pi * k / max(n_spokes, 1)
        disks.append(
            Disk(spoke_ring * math.cos(ang), spoke_ring * math.sin(ang), spoke_radius, spoke_mu)
        )
    return Phantom(tuple(disks))


#: (plane, position) pairs in manifest order.
CONFIGURATIONS = (
    ("Plane0", "Top"),
    ("Plane0", "Middle"),
    ("Plane0", "Bottom"),
    ("Plane1", "Top"),
    ("Plane1", "Middle"),
    ("Plane1", "Bottom"),
)


def default_phantoms(n: int = 6) -> dict:
    """One ring-and-spokes variant per configuration label.

    Spoke count and phase vary between configurations so that strata are
    structurally distinct, as positions and planes of a real scanner would be.
    """
    if not 1 <= n <= len(CONFIGURATIONS):
        raise ConfigurationError(f"n must be in 1..{len(CONFIGURATIONS)}")
    variants = [
        ring_and_spokes(4, phase=0.0),
        ring_and_spokes(6, phase=0.3),
        ring_and_spokes(8, phase=0.1, spoke_radius=0.05),
        ring_and_spokes(5, phase=0.9, spoke_ring=0.45),
        ring_and_spokes(9, phase=0.5, spoke_radius=0.05),
        ring_and_spokes(12, phase=0.2, spoke_radius=0.045, spoke_ring=0.58),
    ]
    out = {}
    for (plane, position), phantom in list(zip(CONFIGURATIONS, variants))[:n]:
        out[f"{plane}_{position}"] = phantom
    return out


def label_parts(label: str) -> tuple:
    parts = label.split("_", 1)
    if len(parts) == 2:
        return parts[0], parts[1]
    return label, ""
