"""Gray-level images on a rectangular pixel domain."""

from __future__ import annotations

import numpy as np

from .errors import ConfigError, InvalidGrayToneError
from .lip import GRAY_8BIT, GrayScaleModel

__all__ = ["Coord", "GrayImage"]

# Pixel coordinates are (x, y) = (column, row), 0-based, matching the CLI.
Coord = tuple[int, int]


class GrayImage:
    """A height x width float64 grid of gray tones under one scale model.

    Instances are immutable after construction (the pixel buffer is marked
    read-only), so they can be shared freely between concurrent growth runs.
    """

    __slots__ = ("pixels", "model")

    def __init__(self, pixels, model: GrayScaleModel = GRAY_8BIT):
        arr = np.array(pixels, dtype=np.float64)
        if arr.ndim != 2 or arr.size == 0:
            raise ConfigError(f"image must be a nonempty 2-D grid, got shape {arr.shape}")
        if not bool(np.all((arr >= 0.0) & (arr < model.m))):
            bad = arr[~((arr >= 0.0) & (arr < model.m))]
            raise InvalidGrayToneError(f"pixel value {bad.flat[0]!r} outside [0, {model.m})")
        arr.setflags(write=False)
        self.pixels = arr
        self.model = model

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def in_bounds(self, p: Coord) -> bool:
        x, y = p
        return 0 <= x < self.pixels.shape[1] and 0 <= y < self.pixels.shape[0]

    def value_at(self, p: Coord) -> float:
        """Gray tone at (x, y).  The caller guarantees p is in bounds."""
        return float(self.pixels[p[1], p[0]])

    def __repr__(self) -> str:
        return f"GrayImage({self.width}x{self.height}, M={self.model.m:g})"
