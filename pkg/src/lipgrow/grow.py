"""Seeded region growing by dilate / test / trim iteration.

One iteration aggregates the whole neighborhood ring of the current region,
then, while the configured heterogeneity exceeds its threshold, strips the
most penalizing newcomers: candidate pixels sitting at the enlarged region's
sup or inf.  Pixels accepted in earlier iterations are protected, so growth
is monotone and terminates within |domain| iterations; a trimmed pixel may
become a candidate again later.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError, SeedError
from .image import Coord, GrayImage
from .region import CriterionConfig, Region

__all__ = [
    "N4_OFFSETS",
    "N8_OFFSETS",
    "neighborhood_offsets",
    "FIXPOINT",
    "MAX_ITERATIONS",
    "IterationRecord",
    "GrowthResult",
    "dilate_ring",
    "trim_to_homogeneous",
    "grow",
]

N4_OFFSETS: tuple[Coord, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))
N8_OFFSETS: tuple[Coord, ...] = N4_OFFSETS + ((1, 1), (1, -1), (-1, 1), (-1, -1))

FIXPOINT = "fixpoint"
MAX_ITERATIONS = "max-iterations"


def neighborhood_offsets(connectivity: int) -> tuple[Coord, ...]:
    """Offset table for 4- or 8-connectivity."""
    if connectivity == 4:
        return N4_OFFSETS
    if connectivity == 8:
        return N8_OFFSETS
    raise ConfigError(f"connectivity must be 4 or 8, got {connectivity!r}")


@dataclass(frozen=True)
class IterationRecord:
    """What one dilate/trim pass did.

    ``candidates`` is the full ring aggregated at the start of the pass,
    ``trimmed`` the subset removed again; the kept pixels are their
    difference.  ``heterogeneity`` is the criterion value after the trim.
    """

    candidates: frozenset[Coord]
    trimmed: frozenset[Coord]
    heterogeneity: float


@dataclass
class GrowthResult:
    region: Region
    iterations: int
    final_heterogeneity: float
    termination: str  # FIXPOINT or MAX_ITERATIONS
    trace: list[IterationRecord] = field(default_factory=list)


def dilate_ring(r: Region, img: GrayImage, connectivity: int = 8) -> set[Coord]:
    """In-domain pixels adjacent to the region but not yet members.

    The union of the region with its ring is exactly the morphological
    dilation of the region by the chosen neighborhood, clipped to the image.
    """
    offsets = neighborhood_offsets(connectivity)
    w = img.width
    h = img.height
    members = r.members
    ring: set[Coord] = set()
    for x, y in members:
        for dx, dy in offsets:
            q = (x + dx, y + dy)
            if 0 <= q[0] < w and 0 <= q[1] < h and q not in members:
                ring.add(q)
    return ring


def trim_to_homogeneous(
    r: Region,
    ring: set[Coord],
    img: GrayImage,
    crit: CriterionConfig,
) -> tuple[Region, set[Coord]]:
    """Aggregate ``ring`` into ``r``, then trim newcomers until homogeneous.

    ``r`` is mutated in place and returned together with the set of trimmed
    pixels.  Only ring pixels are ever removed; the incoming membership is
    protected.  Requires the incoming region to satisfy the criterion (the
    growth loop's induction invariant) and ``ring`` to be disjoint from it.

    Removal policy, applied while the criterion value exceeds the threshold:
    a side (sup or inf) is removable only when no protected pixel attains
    that extremum; the entire equal-valued candidate set of the chosen side
    goes at once.  When both sides are removable, the one whose hypothetical
    removal leaves the lower heterogeneity goes; ties remove the inf side.
    """
    by_value: dict[float, list[Coord]] = {}
    for p in ring:
        by_value.setdefault(img.value_at(p), []).append(p)
    for p in ring:
        r.insert(p, img)

    trimmed: set[Coord] = set()
    stats = r.stats
    model = img.model
    threshold = crit.threshold
    contrast = crit.contrast

    while True:
        hi = stats.maximum()
        lo = stats.minimum()
        if contrast(hi, lo, model) <= threshold:
            break
        hi_px = by_value.get(hi)
        lo_px = by_value.get(lo)
        # A side is free when every candidate at that value came from the ring.
        hi_free = hi_px is not None and stats.count(hi) == len(hi_px)
        lo_free = lo_px is not None and stats.count(lo) == len(lo_px)
        if hi_free and lo_free:
            without_hi = contrast(stats.maximum_excluding(hi), lo, model)
            without_lo = contrast(hi, stats.minimum_excluding(lo), model)
            victim = hi if without_hi < without_lo else lo
        elif hi_free:
            victim = hi
        elif lo_free:
            victim = lo
        else:
            # Both extrema pinned by protected pixels while above threshold:
            # impossible when the incoming region satisfied the criterion.
            raise AssertionError("trim invariant violated: incoming region exceeds threshold")
        for p in by_value.pop(victim):
            r.remove(p, img)
            trimmed.add(p)
    return r, trimmed


def grow(
    img: GrayImage,
    seed: Coord,
    crit: CriterionConfig,
    connectivity: int = 8,
    max_iters: int | None = None,
) -> GrowthResult:
    """Grow a homogeneous region from ``seed`` until it stops changing.

    Each iteration is one dilate/trim pass; the pass that produces no change
    detects the fixpoint and is counted.  ``max_iters`` defaults to
    width*height, which monotone growth provably never needs to exceed.
    """
    seed = (int(seed[0]), int(seed[1]))
    if not img.in_bounds(seed):
        raise SeedError(f"seed {seed} outside {img.width}x{img.height} image")
    neighborhood_offsets(connectivity)  # validate early
    if max_iters is None:
        max_iters = img.width * img.height
    elif max_iters < 0:
        raise ConfigError(f"max_iters must be >= 0, got {max_iters!r}")

    region = Region.from_seed(seed, img)
    trace: list[IterationRecord] = []
    termination = MAX_ITERATIONS
    iterations = 0
    for _ in range(max_iters):
        ring = dilate_ring(region, img, connectivity)
        grew = False
        if ring:
            size_before = len(region)
            region, trimmed = trim_to_homogeneous(region, ring, img, crit)
            grew = len(region) > size_before
        else:
            trimmed = set()
        iterations += 1
        trace.append(
            IterationRecord(frozenset(ring), frozenset(trimmed), crit.evaluate(region, img))
        )
        if not grew:
            termination = FIXPOINT
            break

    return GrowthResult(
        region=region,
        iterations=iterations,
        final_heterogeneity=crit.evaluate(region, img),
        termination=termination,
        trace=trace,
    )
