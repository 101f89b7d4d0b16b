"""Synthetic test images and pixelwise LIP illumination transforms.

The two-plateau generator builds the canonical chaining-effect scene: two
flat regions bridged by a gradual ramp.  A range-based growth criterion
leaks across the bridge once the image is darkened by a LIP shift; the LIP
criteria do not.  All generators are deterministic: same spec, same bytes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .image import GrayImage
from .lip import GRAY_8BIT, GrayScaleModel

__all__ = [
    "PlateauSpec",
    "make_two_plateau",
    "apply_lip_bias",
    "apply_lip_gain",
    "apply_lip_bias_gradient",
]


@dataclass(frozen=True)
class PlateauSpec:
    """Two flat vertical bands with a linear ramp of ``ramp_width`` columns between.

    The plateau columns split the remaining width evenly; the left side takes
    the extra column when the split is odd.  Ramp values interpolate in raw
    gray value, excluding both endpoints.
    """

    width: int
    height: int
    val_a: float
    val_b: float
    ramp_width: int = 0

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ConfigError(f"plateau image must be at least 1x1, got {self.width}x{self.height}")
        if not 0 <= self.ramp_width <= self.width:
            raise ConfigError(f"ramp width {self.ramp_width!r} must lie in [0, width]")


def make_two_plateau(spec: PlateauSpec, model: GrayScaleModel = GRAY_8BIT) -> GrayImage:
    """Render a PlateauSpec: left columns at val_a, right at val_b, ramp between."""
    a = model.check_tone(spec.val_a)
    b = model.check_tone(spec.val_b)
    left = (spec.width - spec.ramp_width + 1) // 2
    cols = np.empty(spec.width, dtype=np.float64)
    cols[:left] = a
    cols[left + spec.ramp_width:] = b
    for j in range(spec.ramp_width):
        cols[left + j] = a + (b - a) * (j + 1) / (spec.ramp_width + 1)
    return GrayImage(np.tile(cols, (spec.height, 1)), model)


def apply_lip_bias(img: GrayImage, c: float) -> GrayImage:
    """LIP-add the constant tone ``c`` to every pixel (a uniform darkening)."""
    c = img.model.check_tone(c)
    px = img.pixels
    return GrayImage(px + c - px * c / img.model.m, img.model)


def apply_lip_gain(img: GrayImage, lam: float) -> GrayImage:
    """LIP-multiply every pixel by ``lam`` > 0."""
    lam = float(lam)
    if not lam > 0.0:
        raise ConfigError(f"gain exponent must be > 0, got {lam!r}")
    m = img.model.m
    return GrayImage(m - m * (1.0 - img.pixels / m) ** lam, img.model)


def apply_lip_bias_gradient(img: GrayImage, c_left: float, c_right: float) -> GrayImage:
    """LIP-add a column-dependent constant ramping linearly from c_left to c_right.

    Simulates a laterally varying illumination field.  The first and last
    columns match apply_lip_bias with c_left and c_right exactly.
    """
    c_left = img.model.check_tone(c_left)
    c_right = img.model.check_tone(c_right)
    cs = np.linspace(c_left, c_right, img.width)
    px = img.pixels
    return GrayImage(px + cs - px * cs / img.model.m, img.model)
