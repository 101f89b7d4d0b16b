"""Scalar gray-tone arithmetic of the logarithmic image processing (LIP) model.

Gray tones are plain floats confined to the half-open scale [0, M).  The LIP
operations model superposition of semi-transparent layers: adding tones
darkens multiplicatively in transmittance space, and the derived contrasts
(LAC, LMC) are exactly invariant under LIP shifts and LIP gains, which is
what makes them useful for illumination-robust segmentation.

All functions here are pure and cheap; they are called per-pixel-decision in
the growth loop, so they deliberately stay scalar (no numpy).  Vectorized
whole-image transforms live in :mod:`lipgrow.synth`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    ConfigError,
    InvalidGrayToneError,
    SingularDenominatorError,
    UnsupportedScalarError,
)

__all__ = [
    "GrayScaleModel",
    "GrayTone",
    "GRAY_8BIT",
    "lip_add",
    "lip_sub",
    "lip_scalar_mul",
    "lac",
    "lmc",
]

# Gray tones are not wrapped in a class; they are floats interpreted under a
# GrayScaleModel.
GrayTone = float


@dataclass(frozen=True)
class GrayScaleModel:
    """The scale bound M.  Valid tones satisfy 0 <= v < M.

    M = 256 covers 8-bit images (integer values 0..255 map to the same
    reals); other bounds are allowed for float pipelines.
    """

    m: float = 256.0

    def __post_init__(self) -> None:
        m = float(self.m)
        if not (math.isfinite(m) and m > 0.0):
            raise ConfigError(f"scale bound must be a positive finite real, got {self.m!r}")
        object.__setattr__(self, "m", m)

    def check_tone(self, v: float) -> float:
        """Return ``v`` as a float, raising if it lies outside [0, M)."""
        v = float(v)
        if not 0.0 <= v < self.m:
            raise InvalidGrayToneError(f"gray tone {v!r} outside [0, {self.m})")
        return v


GRAY_8BIT = GrayScaleModel(256.0)


def lip_add(a: float, b: float, model: GrayScaleModel = GRAY_8BIT) -> float:
    """LIP addition: a + b - a*b/M.

    Commutative, associative, with 0 as the neutral element; closed on
    [0, M) (up to float rounding immediately below the open bound).
    """
    a = model.check_tone(a)
    b = model.check_tone(b)
    return a + b - a * b / model.m


def lip_sub(a: float, b: float, model: GrayScaleModel = GRAY_8BIT) -> float:
    """LIP subtraction: (a - b) / (1 - b/M), the exact inverse of lip_add.

    The result is negative when a < b; it is a signed difference, not
    necessarily a valid tone.  Callers decide whether negative is an error.
    """
    a = model.check_tone(a)
    b = model.check_tone(b)
    denom = 1.0 - b / model.m
    if denom <= 0.0:
        # Unreachable for b < M unless rounding collapses b/M to 1.
        raise SingularDenominatorError(f"cannot subtract tone {b!r} at scale bound {model.m!r}")
    return (a - b) / denom


def lip_scalar_mul(
    lam: float,
    a: float,
    model: GrayScaleModel = GRAY_8BIT,
    *,
    allow_negative: bool = False,
) -> float:
    """LIP scalar multiplication: M - M*(1 - a/M)**lam.

    lam=1 is the identity and lam=0 sends every tone to 0.  For lam >= 0 the
    result stays in [0, M); negative lam leaves the scale and is rejected
    unless ``allow_negative`` is set.
    """
    a = model.check_tone(a)
    lam = float(lam)
    if math.isnan(lam):
        raise UnsupportedScalarError("scalar must be a number, got nan")
    if lam < 0.0 and not allow_negative:
        raise UnsupportedScalarError(f"negative scalar {lam!r} rejected (pass allow_negative=True to override)")
    return model.m - model.m * (1.0 - a / model.m) ** lam


def lac(x: float, y: float, model: GrayScaleModel = GRAY_8BIT) -> float:
    """Logarithmic additive contrast: |x - y| / (1 - min(x,y)/M).

    Symmetric, zero iff x == y, and invariant under a common LIP shift of
    both tones.  Equals the LIP difference of the larger tone by the
    smaller one.
    """
    x = model.check_tone(x)
    y = model.check_tone(y)
    lo = x if x < y else y
    return abs(x - y) / (1.0 - lo / model.m)


def lmc(x: float, y: float, model: GrayScaleModel = GRAY_8BIT) -> float:
    """Logarithmic multiplicative contrast: ln(1 - max/M) / ln(1 - min/M).

    Always >= 1, equal to 1 iff x == y (including x == y == 0, where the
    log ratio is formally 0/0), and +inf when exactly one tone is 0 (the
    denominator log vanishes).  Invariant under a common LIP gain.
    """
    x = model.check_tone(x)
    y = model.check_tone(y)
    if x == y:
        return 1.0
    hi, lo = (x, y) if x > y else (y, x)
    den = math.log1p(-lo / model.m)
    if den == 0.0:
        # lo == 0, or so small that lo/M underflows: the singular case.
        return math.inf
    return math.log1p(-hi / model.m) / den
