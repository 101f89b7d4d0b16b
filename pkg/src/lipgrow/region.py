"""Region bookkeeping and the homogeneity criteria that steer growth.

The growth loop re-evaluates region heterogeneity after every single pixel
removal, so a region keeps an incrementally maintained multiset of its
member values: sup/inf queries never rescan the membership.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    ConfigError,
    DuplicateMemberError,
    EmptyRegionError,
    MissingMemberError,
)
from .image import Coord, GrayImage
from .lip import GrayScaleModel, lac, lmc

__all__ = [
    "MinMaxMultiset",
    "Region",
    "CriterionConfig",
    "CRITERION_KINDS",
    "heterogeneity_additive",
    "heterogeneity_multiplicative",
    "heterogeneity_range",
]


class MinMaxMultiset:
    """Multiset of floats with O(log n) add/remove and amortized O(log n) extrema.

    A counts dict holds multiplicities; two heaps (a min-heap and a negated
    max-heap) index candidate extrema lazily.  Stale heap entries -- values
    whose count dropped to zero -- are discarded when an extremum is queried,
    so every element is pushed and popped at most once per insertion and the
    amortized bound holds.
    """

    __slots__ = ("_counts", "_lo", "_hi", "_n")

    def __init__(self) -> None:
        self._counts: dict[float, int] = {}
        self._lo: list[float] = []
        self._hi: list[float] = []
        self._n = 0

    def __len__(self) -> int:
        return self._n

    def __contains__(self, v: float) -> bool:
        return self._counts.get(v, 0) > 0

    def count(self, v: float) -> int:
        return self._counts.get(v, 0)

    def add(self, v: float) -> None:
        self._counts[v] = self._counts.get(v, 0) + 1
        heapq.heappush(self._lo, v)
        heapq.heappush(self._hi, -v)
        self._n += 1

    def remove(self, v: float) -> None:
        c = self._counts.get(v, 0)
        if c == 0:
            raise KeyError(v)
        if c == 1:
            del self._counts[v]
        else:
            self._counts[v] = c - 1
        self._n -= 1

    def minimum(self) -> float:
        if self._n == 0:
            raise EmptyRegionError("minimum of an empty multiset")
        lo = self._lo
        while self._counts.get(lo[0], 0) == 0:
            heapq.heappop(lo)
        return lo[0]

    def maximum(self) -> float:
        if self._n == 0:
            raise EmptyRegionError("maximum of an empty multiset")
        hi = self._hi
        while self._counts.get(-hi[0], 0) == 0:
            heapq.heappop(hi)
        return -hi[0]

    def maximum_excluding(self, v: float) -> float:
        """Largest value if every copy of ``v`` were removed.

        Used to evaluate a hypothetical trim without committing to it.
        """
        k = self._counts.pop(v)
        self._n -= k
        try:
            return self.maximum()
        finally:
            self._n += k
            self._counts[v] = k
            heapq.heappush(self._hi, -v)  # lazy cleanup may have dropped v

    def minimum_excluding(self, v: float) -> float:
        k = self._counts.pop(v)
        self._n -= k
        try:
            return self.minimum()
        finally:
            self._n += k
            self._counts[v] = k
            heapq.heappush(self._lo, v)

    def items(self) -> Iterator[tuple[float, int]]:
        return iter(self._counts.items())

    def copy(self) -> "MinMaxMultiset":
        dup = MinMaxMultiset.__new__(MinMaxMultiset)
        dup._counts = dict(self._counts)
        dup._lo = list(self._lo)
        dup._hi = list(self._hi)
        dup._n = self._n
        return dup


class Region:
    """A set of pixel coordinates plus the multiset of their gray values.

    ``sup``/``inf`` reflect the true extrema of the image over the members at
    all times; insert/remove keep them current in logarithmic time.
    """

    __slots__ = ("members", "stats")

    def __init__(self) -> None:
        self.members: set[Coord] = set()
        self.stats = MinMaxMultiset()

    @classmethod
    def from_seed(cls, p: Coord, img: GrayImage) -> "Region":
        r = cls()
        r.insert(p, img)
        return r

    @classmethod
    def from_coords(cls, coords: Iterable[Coord], img: GrayImage) -> "Region":
        r = cls()
        for p in coords:
            r.insert(p, img)
        return r

    def insert(self, p: Coord, img: GrayImage) -> "Region":
        """Add pixel p (must be in the image domain and not a member yet)."""
        if p in self.members:
            raise DuplicateMemberError(f"pixel {p} already in region")
        self.members.add(p)
        self.stats.add(img.value_at(p))
        return self

    def remove(self, p: Coord, img: GrayImage) -> "Region":
        if p not in self.members:
            raise MissingMemberError(f"pixel {p} not in region")
        self.members.remove(p)
        self.stats.remove(img.value_at(p))
        return self

    @property
    def sup(self) -> float:
        return self.stats.maximum()

    @property
    def inf(self) -> float:
        return self.stats.minimum()

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p: Coord) -> bool:
        return p in self.members

    def copy(self) -> "Region":
        dup = Region.__new__(Region)
        dup.members = set(self.members)
        dup.stats = self.stats.copy()
        return dup

    def __repr__(self) -> str:
        if not self.members:
            return "Region(empty)"
        return f"Region({len(self.members)} px, inf={self.inf:g}, sup={self.sup:g})"


def heterogeneity_additive(r: Region, img: GrayImage) -> float:
    """LIP-additive heterogeneity: the LAC of the region's extrema.

    (sup - inf) / (1 - inf/M); zero iff all member values are equal.
    Unchanged when a constant is LIP-added to the whole image.
    """
    if len(r) == 0:
        raise EmptyRegionError("heterogeneity of an empty region")
    return lac(r.sup, r.inf, img.model)


def heterogeneity_multiplicative(r: Region, img: GrayImage) -> float:
    """LIP-multiplicative heterogeneity: the LMC of the region's extrema.

    1 iff all member values are equal; +inf as soon as the region holds a
    0-valued pixel together with any positive one.  Unchanged under a LIP
    gain of the whole image.
    """
    if len(r) == 0:
        raise EmptyRegionError("heterogeneity of an empty region")
    return lmc(r.sup, r.inf, img.model)


def heterogeneity_range(r: Region, img: GrayImage) -> float:
    """Classical gray-level range sup - inf (the non-LIP baseline)."""
    if len(r) == 0:
        raise EmptyRegionError("heterogeneity of an empty region")
    return r.sup - r.inf


CRITERION_KINDS = ("range", "lip-add", "lip-mul")


@dataclass(frozen=True)
class CriterionConfig:
    """Which heterogeneity measure steers growth, and its acceptance threshold.

    A single pixel scores 0 under range/lip-add and 1 under lip-mul, hence
    the different lower bounds on the threshold.
    """

    kind: str
    threshold: float

    def __post_init__(self) -> None:
        if self.kind not in CRITERION_KINDS:
            raise ConfigError(f"unknown criterion {self.kind!r}, expected one of {CRITERION_KINDS}")
        t = float(self.threshold)
        if not math.isfinite(t):
            raise ConfigError(f"threshold must be finite, got {self.threshold!r}")
        floor = 1.0 if self.kind == "lip-mul" else 0.0
        if t < floor:
            raise ConfigError(f"criterion {self.kind!r} needs threshold >= {floor:g}, got {t!r}")
        object.__setattr__(self, "threshold", t)

    def contrast(self, hi: float, lo: float, model: GrayScaleModel) -> float:
        """The criterion's value for a (sup, inf) pair of tones."""
        if self.kind == "range":
            return hi - lo
        if self.kind == "lip-add":
            return lac(hi, lo, model)
        return lmc(hi, lo, model)

    def evaluate(self, r: Region, img: GrayImage) -> float:
        if len(r) == 0:
            raise EmptyRegionError("heterogeneity of an empty region")
        return self.contrast(r.sup, r.inf, img.model)

    def is_homogeneous(self, r: Region, img: GrayImage) -> bool:
        return self.evaluate(r, img) <= self.threshold
