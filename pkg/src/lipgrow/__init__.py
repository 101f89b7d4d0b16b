"""Gray-level segmentation by seeded region growing under the logarithmic
image processing (LIP) model.

The LIP heterogeneity criteria (additive and multiplicative) are invariant
to LIP illumination shifts and gains, which makes the grown regions robust
to the chaining effect that leaks the classical range criterion across
low-contrast bridges.
"""

from .errors import (
    ConfigError,
    DuplicateMemberError,
    EmptyRegionError,
    FormatError,
    InvalidGrayToneError,
    LipGrowError,
    MissingMemberError,
    SeedError,
    SingularDenominatorError,
    UnsupportedDepthError,
    UnsupportedScalarError,
)
from .grow import (
    FIXPOINT,
    MAX_ITERATIONS,
    N4_OFFSETS,
    N8_OFFSETS,
    GrowthResult,
    IterationRecord,
    dilate_ring,
    grow,
    neighborhood_offsets,
    trim_to_homogeneous,
)
from .image import Coord, GrayImage
from .imgio import (
    SegmentationStats,
    read_image,
    write_image,
    write_lipf,
    write_mask,
    write_overlay,
    write_pgm,
    write_stats,
)
from .lip import (
    GRAY_8BIT,
    GrayScaleModel,
    GrayTone,
    lac,
    lip_add,
    lip_scalar_mul,
    lip_sub,
    lmc,
)
from .region import (
    CRITERION_KINDS,
    CriterionConfig,
    MinMaxMultiset,
    Region,
    heterogeneity_additive,
    heterogeneity_multiplicative,
    heterogeneity_range,
)
from .synth import (
    PlateauSpec,
    apply_lip_bias,
    apply_lip_bias_gradient,
    apply_lip_gain,
    make_two_plateau,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # lip
    "GrayScaleModel", "GrayTone", "GRAY_8BIT",
    "lip_add", "lip_sub", "lip_scalar_mul", "lac", "lmc",
    # image / region
    "Coord", "GrayImage", "Region", "MinMaxMultiset",
    "CriterionConfig", "CRITERION_KINDS",
    "heterogeneity_additive", "heterogeneity_multiplicative", "heterogeneity_range",
    # grower
    "grow", "dilate_ring", "trim_to_homogeneous", "neighborhood_offsets",
    "GrowthResult", "IterationRecord",
    "N4_OFFSETS", "N8_OFFSETS", "FIXPOINT", "MAX_ITERATIONS",
    # synth
    "PlateauSpec", "make_two_plateau",
    "apply_lip_bias", "apply_lip_gain", "apply_lip_bias_gradient",
    # imgio
    "read_image", "write_image", "write_pgm", "write_lipf",
    "write_mask", "write_overlay", "write_stats", "SegmentationStats",
    # errors
    "LipGrowError", "InvalidGrayToneError", "SingularDenominatorError",
    "UnsupportedScalarError", "ConfigError", "EmptyRegionError",
    "DuplicateMemberError", "MissingMemberError", "SeedError",
    "FormatError", "UnsupportedDepthError",
]
