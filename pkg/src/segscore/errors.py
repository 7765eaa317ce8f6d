"""Exception types shared across the package."""


class SegScoreError(Exception):
    """Base class for all segscore failures."""


class UnsupportedFormatError(SegScoreError):
    """Input is not an 8-bit grayscale/RGB PNG or a binary (P5) PGM."""


class DimensionMismatchError(SegScoreError):
    """A ground-truth/prediction pair disagrees on image dimensions."""


class PairingError(SegScoreError):
    """Two mask directories cannot be matched up."""


class UnknownMetricError(SegScoreError):
    """A metric identifier is outside the supported set."""
