"""Image ingestion and artifact emission.

Inputs: PGM (P2/P5) and PPM (P3/P6) with 8-bit samples, plus LIPF, a
plain-text float grid ("LIPF w h M" header, then w*h reals) that carries its
own scale bound and round-trips float64 tones exactly.  8-bit data maps
integer v to the real v under M = 256, so every sample is a strictly valid
tone.

Outputs: P5 masks (255 inside the region), P6 overlays (region blended
toward red, seed marked by a red cross) and a flat JSON stats object.
Everything written here is byte-deterministic.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigError, FormatError, UnsupportedDepthError
from .image import Coord, GrayImage
from .lip import GRAY_8BIT, GrayScaleModel
from .region import Region

__all__ = [
    "SegmentationStats",
    "read_image",
    "write_pgm",
    "write_lipf",
    "write_image",
    "write_mask",
    "write_overlay",
    "write_stats",
]

_WHITESPACE = b" \t\r\n\v\f"


@dataclass
class SegmentationStats:
    """Flat summary of one growth run, as serialized to JSON."""

    seed: Coord
    criterion: str
    threshold: float
    iterations: int
    region_size: int
    final_heterogeneity: float
    termination: str

    def __post_init__(self) -> None:
        if self.region_size < 1:
            raise ConfigError("region_size must be >= 1")
        if self.iterations < 0:
            raise ConfigError("iterations must be >= 0")

    def to_json_dict(self) -> dict:
        h = self.final_heterogeneity
        return {
            "seed": [self.seed[0], self.seed[1]],
            "criterion": self.criterion,
            "threshold": self.threshold,
            "iterations": self.iterations,
            "region_size": self.region_size,
            "final_heterogeneity": "inf" if math.isinf(h) else h,
            "termination": self.termination,
        }


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    """Next header token, skipping whitespace and '#' comments."""
    n = len(data)
    while pos < n:
        ch = data[pos]
        if ch in _WHITESPACE:
            pos += 1
        elif ch == 0x23:  # '#'
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    if pos >= n:
        raise FormatError("truncated header")
    start = pos
    while pos < n and data[pos] not in _WHITESPACE and data[pos] != 0x23:
        pos += 1
    return data[start:pos], pos


def _header_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    tok, pos = _next_token(data, pos)
    try:
        return int(tok), pos
    except ValueError:
        raise FormatError(f"bad {what} field {tok!r}") from None


def _ascii_samples(data: bytes, pos: int) -> list[int]:
    """All remaining ASCII integer samples, comments stripped."""
    chunks = []
    for line in data[pos:].split(b"\n"):
        hash_at = line.find(b"#")
        chunks.append(line if hash_at < 0 else line[:hash_at])
    try:
        return [int(t) for t in b" ".join(chunks).split()]
    except ValueError:
        raise FormatError("non-integer sample in ASCII pixel data") from None


def _parse_pnm_header(data: bytes) -> tuple[bytes, int, int, int, int]:
    magic, pos = _next_token(data, 0)
    width, pos = _header_int(data, pos, "width")
    height, pos = _header_int(data, pos, "height")
    maxval, pos = _header_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise FormatError(f"bad image dimensions {width}x{height}")
    if maxval > 255:
        raise UnsupportedDepthError(f"maxval {maxval} exceeds 8-bit samples")
    if maxval < 1:
        raise FormatError(f"bad maxval {maxval}")
    return magic, width, height, maxval, pos


def _binary_raster(data: bytes, pos: int, count: int) -> np.ndarray:
    # Exactly one whitespace byte separates the maxval token from the raster.
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise FormatError("missing raster separator after header")
    pos += 1
    if len(data) - pos < count:
        raise FormatError(f"truncated pixel data: expected {count} bytes, got {len(data) - pos}")
    return np.frombuffer(data, dtype=np.uint8, count=count, offset=pos)


def _check_range(arr: np.ndarray, maxval: int) -> np.ndarray:
    if arr.size and (int(arr.max()) > maxval or int(arr.min()) < 0):
        raise FormatError(f"sample outside [0, {maxval}]")
    return arr


def _luma(rgb: np.ndarray) -> np.ndarray:
    # Integer-weighted BT.601 so integer grays stay exact: (255,255,255) -> 255.0.
    r = rgb[:, :, 0].astype(np.float64)
    g = rgb[:, :, 1].astype(np.float64)
    b = rgb[:, :, 2].astype(np.float64)
    return (299.0 * r + 587.0 * g + 114.0 * b) / 1000.0


def _read_lipf(data: bytes) -> GrayImage:
    try:
        tokens = data.decode("ascii").split()
    except UnicodeDecodeError:
        raise FormatError("LIPF file is not ASCII text") from None
    if len(tokens) < 4:
        raise FormatError("truncated LIPF header")
    try:
        width, height = int(tokens[1]), int(tokens[2])
        bound = float(tokens[3])
    except ValueError:
        raise FormatError("bad LIPF header fields") from None
    if width < 1 or height < 1:
        raise FormatError(f"bad image dimensions {width}x{height}")
    values = tokens[4:]
    if len(values) != width * height:
        raise FormatError(f"LIPF data holds {len(values)} values, expected {width * height}")
    try:
        arr = np.array([float(t) for t in values], dtype=np.float64)
    except ValueError:
        raise FormatError("non-numeric LIPF sample") from None
    try:
        model = GrayScaleModel(bound)
    except ConfigError as exc:
        raise FormatError(str(exc)) from None
    return GrayImage(arr.reshape(height, width), model)


def read_image(path) -> GrayImage:
    """Read a PGM/PPM/LIPF file into a GrayImage.

    Color pixels are converted to real-valued, unrounded BT.601 luma.
    """
    data = Path(path).read_bytes()
    if not data:
        raise FormatError(f"{path}: empty file")
    magic, _ = _next_token(data, 0)
    if magic == b"LIPF":
        return _read_lipf(data)
    if magic not in (b"P2", b"P3", b"P5", b"P6"):
        raise FormatError(f"{path}: unknown magic {magic!r}")
    magic, width, height, maxval, pos = _parse_pnm_header(data)
    if magic == b"P5":
        samples = _binary_raster(data, pos, width * height)
        arr = _check_range(samples, maxval).astype(np.float64).reshape(height, width)
    elif magic == b"P6":
        samples = _binary_raster(data, pos, 3 * width * height)
        rgb = _check_range(samples, maxval).reshape(height, width, 3)
        arr = _luma(rgb)
    else:
        values = _ascii_samples(data, pos)
        per_px = 3 if magic == b"P3" else 1
        if len(values) != per_px * width * height:
            raise FormatError(
                f"expected {per_px * width * height} samples, got {len(values)}"
            )
        samples = _check_range(np.array(values, dtype=np.int64), maxval)
        if magic == b"P3":
            arr = _luma(samples.reshape(height, width, 3))
        else:
            arr = samples.astype(np.float64).reshape(height, width)
    return GrayImage(arr, GRAY_8BIT)


def _round_half_up(arr: np.ndarray) -> np.ndarray:
    return np.floor(arr + 0.5)


def _to_bytes_gray(img: GrayImage) -> np.ndarray:
    return np.clip(_round_half_up(img.pixels), 0, 255).astype(np.uint8)


def write_pgm(img: GrayImage, path) -> None:
    """Write as binary PGM (P5), rounding tones half-up to 8-bit."""
    arr = _to_bytes_gray(img)
    with open(path, "wb") as fh:
        fh.write(f"P5\n{img.width} {img.height}\n255\n".encode("ascii"))
        fh.write(arr.tobytes())


def write_lipf(img: GrayImage, path) -> None:
    """Write the exact float grid; repr round-trips every tone bit-for-bit."""
    lines = [f"LIPF {img.width} {img.height} {img.model.m!r}"]
    for row in img.pixels:
        lines.append(" ".join(repr(v) for v in row.tolist()))
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def write_image(img: GrayImage, path, fmt: str) -> None:
    """Dispatch on fmt: 'pgm' (rounded 8-bit) or 'lipf' (exact)."""
    if fmt == "pgm":
        write_pgm(img, path)
    elif fmt == "lipf":
        write_lipf(img, path)
    else:
        raise ConfigError(f"unknown image format {fmt!r}")


def write_mask(region: Region, width: int, height: int, path) -> None:
    """Binary PGM mask: member pixels 255, everything else 0."""
    arr = np.zeros((height, width), dtype=np.uint8)
    for x, y in region.members:
        if not (0 <= x < width and 0 <= y < height):
            raise ConfigError(f"region pixel {(x, y)} outside {width}x{height} mask")
        arr[y, x] = 255
    with open(path, "wb") as fh:
        fh.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        fh.write(arr.tobytes())


def write_overlay(img: GrayImage, region: Region, seed: Coord, path) -> None:
    """PPM overlay: gray background, region blended halfway to red, red seed cross.

    The cross covers the seed and its four edge neighbors (clipped to the
    image) and overdraws the blend.  Tones are clipped to the 8-bit display
    range when the image's scale bound exceeds 256.
    """
    gray = _to_bytes_gray(img)
    rgb = np.repeat(gray[:, :, None], 3, axis=2)
    half = np.clip(_round_half_up(img.pixels / 2.0), 0, 255).astype(np.uint8)
    half_up = np.clip(_round_half_up((img.pixels + 255.0) / 2.0), 0, 255).astype(np.uint8)
    for x, y in region.members:
        rgb[y, x] = (half_up[y, x], half[y, x], half[y, x])
    sx, sy = seed
    for dx, dy in ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)):
        if img.in_bounds((sx + dx, sy + dy)):
            rgb[sy + dy, sx + dx] = (255, 0, 0)
    with open(path, "wb") as fh:
        fh.write(f"P6\n{img.width} {img.height}\n255\n".encode("ascii"))
        fh.write(rgb.tobytes())


def write_stats(stats: SegmentationStats, path) -> None:
    """Flat JSON object; +infinity heterogeneity becomes the string "inf"."""
    Path(path).write_text(json.dumps(stats.to_json_dict(), indent=2) + "\n", encoding="ascii")
