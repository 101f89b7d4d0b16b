import itertools

import numpy as np
import pytest

from lipgrow import (
    ConfigError,
    CriterionConfig,
    GrayImage,
    Region,
    SeedError,
    dilate_ring,
    grow,
    neighborhood_offsets,
    trim_to_homogeneous,
)

from reference import (
    check_structural_invariants,
    criterion_value,
    flood_component,
    naive_grow,
)


def _brute_ring(members, w, h, connectivity):
    offs = neighborhood_offsets(connectivity)
    out = set()
    for x, y in members:
        for dx, dy in offs:
            q = (x + dx, y + dy)
            if 0 <= q[0] < w and 0 <= q[1] < h and q not in members:
                out.add(q)
    return out


# ------------------------------------------------------------- dilation

def test_ring_single_interior_pixel_n8():
    img = GrayImage(np.zeros((5, 5)))
    r = Region.from_seed((2, 2), img)
    ring = dilate_ring(r, img, 8)
    assert ring == {(x, y) for x in (1, 2, 3) for y in (1, 2, 3)} - {(2, 2)}
    assert len(ring) == 8


def test_ring_corner_pixel_clipped():
    img = GrayImage(np.zeros((4, 4)))
    r = Region.from_seed((0, 0), img)
    assert dilate_ring(r, img, 8) == {(1, 0), (0, 1), (1, 1)}
    assert dilate_ring(r, img, 4) == {(1, 0), (0, 1)}


def test_ring_block_n4_has_twelve_border_pixels():
    img = GrayImage(np.zeros((9, 9)))
    block = [(x, y) for x in (3, 4, 5) for y in (3, 4, 5)]
    r = Region.from_coords(block, img)
    ring = dilate_ring(r, img, 4)
    assert len(ring) == 12
    assert ring == _brute_ring(set(block), 9, 9, 4)


def test_ring_matches_brute_force_on_random_regions():
    rng = np.random.default_rng(3)
    img = GrayImage(rng.integers(0, 256, size=(7, 9)))
    for conn in (4, 8):
        for _ in range(25):
            n = int(rng.integers(1, 20))
            coords = {(int(rng.integers(9)), int(rng.integers(7))) for _ in range(n)}
            r = Region.from_coords(coords, img)
            assert dilate_ring(r, img, conn) == _brute_ring(coords, 9, 7, conn)


def test_bad_connectivity():
    img = GrayImage(np.zeros((3, 3)))
    with pytest.raises(ConfigError):
        dilate_ring(Region.from_seed((0, 0), img), img, 6)


# ------------------------------------------------------------- trimming

def test_trim_keeps_everything_when_homogeneous():
    img = GrayImage([[10.0, 11.0, 12.0]])
    r = Region.from_seed((0, 0), img)
    crit = CriterionConfig("range", 5.0)
    kept, trimmed = trim_to_homogeneous(r, {(1, 0), (2, 0)}, img, crit)
    assert kept.members == {(0, 0), (1, 0), (2, 0)}
    assert trimmed == set()


def test_trim_removes_only_the_outlier_verified_by_subset_brute_force():
    # 5x5 scene: protected 3x3 block of mid tones, ring of 16 with one outlier.
    rng = np.random.default_rng(42)
    pixels = rng.uniform(30.0, 40.0, size=(5, 5))
    pixels[0, 0] = 200.0  # the outlier, a ring corner
    img = GrayImage(pixels)
    block = {(x, y) for x in (1, 2, 3) for y in (1, 2, 3)}
    ring = {(x, y) for x in range(5) for y in range(5)} - block
    crit = CriterionConfig("lip-add", 25.0)

    r = Region.from_coords(block, img)
    kept, trimmed = trim_to_homogeneous(r, set(ring), img, crit)
    assert trimmed == {(0, 0)}
    assert kept.members == block | ring - {(0, 0)}

    # Brute force: among all ring subsets whose removal restores homogeneity,
    # {(0,0)} must be the unique minimal one.
    ring_list = sorted(ring)
    minimal = None
    for k in range(len(ring_list) + 1):
        hits = []
        for subset in itertools.combinations(ring_list, k):
            cand = block | ring - set(subset)
            vals = [img.value_at(p) for p in cand]
            if criterion_value("lip-add", max(vals), min(vals), 256.0) <= 25.0:
                hits.append(set(subset))
        if hits:
            minimal = hits
            break
    assert minimal == [{(0, 0)}]


def test_trim_removes_equal_valued_peers_together():
    img = GrayImage([[30.0, 30.0, 30.0], [200.0, 30.0, 200.0]])
    r = Region.from_coords([(0, 0), (1, 0), (2, 0)], img)
    ring = {(0, 1), (1, 1), (2, 1)}
    kept, trimmed = trim_to_homogeneous(r, ring, img, CriterionConfig("range", 25.0))
    assert trimmed == {(0, 1), (2, 1)}  # both outliers share the sup value
    assert (1, 1) in kept.members


def test_trim_exhausts_far_ring_and_returns_input():
    img = GrayImage([[10.0, 10.0], [200.0, 200.0]])
    r = Region.from_coords([(0, 0), (1, 0)], img)
    ring = {(0, 1), (1, 1)}
    kept, trimmed = trim_to_homogeneous(r, set(ring), img, CriterionConfig("range", 5.0))
    assert kept.members == {(0, 0), (1, 0)}
    assert trimmed == ring


def test_trim_protects_extremum_shared_with_region():
    # Sup value 50 occurs both in the protected region and the ring: the sup
    # side is pinned, so trimming must fall back to the inf side.
    img = GrayImage([[50.0, 20.0], [50.0, 3.0]])
    r = Region.from_coords([(0, 0), (1, 0)], img)  # values 50, 20
    ring = {(0, 1), (1, 1)}  # values 50, 3
    kept, trimmed = trim_to_homogeneous(r, set(ring), img, CriterionConfig("range", 40.0))
    assert trimmed == {(1, 1)}
    assert kept.members == {(0, 0), (1, 0), (0, 1)}


def test_trim_picks_side_leaving_lower_heterogeneity():
    # Both extremes are free; removing the sup (90) leaves range 25 <= t,
    # removing the inf (25) would leave range 50. The sup side must go, once.
    img = GrayImage([[40.0, 50.0, 25.0, 90.0]])
    r = Region.from_coords([(0, 0), (1, 0)], img)
    ring = {(2, 0), (3, 0)}
    kept, trimmed = trim_to_homogeneous(r, set(ring), img, CriterionConfig("range", 35.0))
    assert trimmed == {(3, 0)}
    assert kept.members == {(0, 0), (1, 0), (2, 0)}


def test_trim_tie_removes_inf_side():
    # Symmetric instance: removing either free side leaves range 20 <= t.
    img = GrayImage([[40.0, 50.0, 20.0, 70.0]])
    r = Region.from_coords([(0, 0), (1, 0)], img)
    ring = {(2, 0), (3, 0)}
    kept, trimmed = trim_to_homogeneous(r, set(ring), img, CriterionConfig("range", 30.0))
    assert trimmed == {(2, 0)}  # the inf pixel, by the tie rule
    assert (3, 0) in kept.members


# ------------------------------------------------------------- growth

def test_grow_constant_image_fills_domain():
    img = GrayImage(np.full((6, 9), 130.0))
    res = grow(img, (4, 3), CriterionConfig("lip-add", 0.0))
    assert res.region.members == {(x, y) for x in range(9) for y in range(6)}
    assert res.termination == "fixpoint"
    assert res.final_heterogeneity == 0.0
    assert res.iterations <= 9 * 6


def test_grow_zero_threshold_selects_equal_valued_component():
    img = GrayImage(
        [
            [7.0, 7.0, 3.0, 7.0],
            [7.0, 3.0, 3.0, 7.0],
            [3.0, 3.0, 7.0, 7.0],
        ]
    )
    res = grow(img, (0, 0), CriterionConfig("lip-add", 0.0), connectivity=4)
    assert res.region.members == {(0, 0), (1, 0), (0, 1)}
    # under N8 the right-hand 7-block is diagonally reachable via (2,2)? no:
    # (1,1) is 3, so the bridge is (2,2)-(3,1); from (1,0) the diagonal (2,1)
    # is 3 too; N8 still cannot cross the 3-band except via (2,2), which is
    # only reachable once (3,1)/(3,0) are -- and they connect through (2,2).
    res8 = grow(img, (0, 0), CriterionConfig("lip-add", 0.0), connectivity=8)
    assert res8.region.members == flood_component(
        {p for p in ((x, y) for x in range(4) for y in range(3)) if img.value_at(p) == 7.0},
        (0, 0),
        8,
    )


def test_grow_seed_and_config_errors():
    img = GrayImage(np.zeros((4, 4)))
    with pytest.raises(SeedError):
        grow(img, (4, 0), CriterionConfig("range", 1.0))
    with pytest.raises(SeedError):
        grow(img, (-1, 2), CriterionConfig("range", 1.0))
    with pytest.raises(ConfigError):
        grow(img, (0, 0), CriterionConfig("range", 1.0), connectivity=5)
    with pytest.raises(ConfigError):
        grow(img, (0, 0), CriterionConfig("range", 1.0), max_iters=-1)


def test_grow_max_iters_cap():
    img = GrayImage(np.full((8, 8), 9.0))
    res = grow(img, (0, 0), CriterionConfig("range", 0.0), max_iters=2)
    assert res.termination == "max-iterations"
    assert res.iterations == 2
    assert len(res.region) == 9  # seed plus two N8 shells minus clipping

    res0 = grow(img, (0, 0), CriterionConfig("range", 0.0), max_iters=0)
    assert res0.termination == "max-iterations"
    assert res0.iterations == 0
    assert res0.region.members == {(0, 0)}


def test_grow_single_pixel_region_is_homogeneous():
    img = GrayImage([[0.0, 255.0], [255.0, 255.0]])
    res = grow(img, (0, 0), CriterionConfig("lip-mul", 2.0))
    assert res.region.members == {(0, 0)}
    assert res.final_heterogeneity == 1.0
    assert res.termination == "fixpoint"


def test_grow_matches_naive_reference_on_random_images():
    rng = np.random.default_rng(99)
    for trial in range(60):
        img = GrayImage(rng.integers(0, 256, size=(6, 6)))
        seed = (int(rng.integers(6)), int(rng.integers(6)))
        conn = 4 if trial % 3 == 0 else 8
        for kind, t in (
            ("range", float(rng.uniform(0, 160))),
            ("lip-add", float(rng.uniform(0, 200))),
            ("lip-mul", float(rng.uniform(1, 6))),
        ):
            crit = CriterionConfig(kind, t)
            res = grow(img, seed, crit, connectivity=conn)
            assert res.region.members == naive_grow(img, seed, kind, t, conn)
            check_structural_invariants(img, seed, crit, conn, res)


def test_grow_trace_is_deterministic():
    rng = np.random.default_rng(5)
    img = GrayImage(rng.integers(0, 256, size=(9, 9)))
    crit = CriterionConfig("lip-add", 60.0)
    a = grow(img, (4, 4), crit)
    b = grow(img, (4, 4), crit)
    assert a.region.members == b.region.members
    assert a.trace == b.trace
    assert (a.iterations, a.final_heterogeneity, a.termination) == (
        b.iterations,
        b.final_heterogeneity,
        b.termination,
    )


def test_grow_trimmed_pixels_may_rejoin_later():
    # The ramp pixel (2,0) is too far from the seed tone at first (range 12
    # vs t=10) but joins once... it cannot: range to 22 stays 12. Use a case
    # where the inf side gets trimmed in iteration 1 yet returns in a later
    # ring: seed 10, neighbor 22 rejected (range 12 > 10), but after the
    # region absorbs 15 and 20 the sup reaches 20 and 22 still exceeds t from
    # inf 10. Rejoining requires the criterion value to depend on more than
    # the pair -- with range it cannot happen, with lip-add it cannot either
    # (both depend only on sup/inf). So instead verify re-candidacy directly:
    # a trimmed pixel appears again among later candidates.
    img = GrayImage([[10.0, 15.0, 20.0, 22.0]])
    res = grow(img, (0, 0), CriterionConfig("range", 10.0))
    trimmed_once = set().union(*[rec.trimmed for rec in res.trace]) if res.trace else set()
    later_candidates = set().union(*[rec.candidates for rec in res.trace[1:]]) if len(res.trace) > 1 else set()
    assert trimmed_once & later_candidates  # trimmed pixels were re-offered
    assert res.region.members == {(0, 0), (1, 0), (2, 0)}
