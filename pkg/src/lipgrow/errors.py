"""Exception types raised by this package.

The CLI maps these onto exit codes, so keeping them distinct matters:
configuration mistakes, file-format problems and out-of-domain seeds are
different failure classes for callers.
"""


class LipGrowError(Exception):
    """Base class for every error this package raises on purpose."""


class InvalidGrayToneError(LipGrowError):
    """A gray-tone value lies outside the scale [0, M)."""


class SingularDenominatorError(LipGrowError):
    """LIP subtraction hit a zero denominator (subtrahend at the scale bound)."""


class UnsupportedScalarError(LipGrowError):
    """Negative scalar passed to LIP scalar multiplication without opt-in."""


class ConfigError(LipGrowError):
    """Invalid configuration: criterion, threshold, connectivity, image spec."""


class EmptyRegionError(LipGrowError):
    """The operation needs a nonempty region."""


class DuplicateMemberError(LipGrowError):
    """Pixel inserted into a region it already belongs to."""


class MissingMemberError(LipGrowError):
    """Pixel removed from a region it does not belong to."""


class SeedError(LipGrowError):
    """Seed coordinate outside the image domain."""


class FormatError(LipGrowError):
    """Malformed, truncated or unrecognized image file content."""


class UnsupportedDepthError(FormatError):
    """Sample depth beyond 8 bits per channel."""
