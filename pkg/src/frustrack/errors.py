"""Exception types shared across the package."""


class FrustrackError(Exception):
    """Base class for all frustrack errors."""


class BehindCameraError(FrustrackError):
    """Point or box has nonpositive camera-frame depth."""


class SingularProjectionError(FrustrackError):
    """Projection matrix is not invertible on its 3x3 block."""


class DegenerateBoxError(FrustrackError):
    """2D box has zero or negative extent."""


class UnboundedPolytopeError(FrustrackError):
    """Half-spaces do not bound a finite region."""


class ZeroUnionError(FrustrackError):
    """IoU undefined: both operands have zero volume."""


class EmptyResultError(FrustrackError):
    """An intersection that must be nonempty came out empty."""


class LengthMismatchError(FrustrackError):
    """Vector operands have different lengths."""


class InvalidDistributionError(FrustrackError):
    """Probability vector is not positive or does not sum to one."""


class MissingKeyError(FrustrackError):
    """Calibration file lacks a required matrix key."""


class MalformedMatrixError(FrustrackError):
    """Calibration matrix line has the wrong shape or bad numbers."""


class MalformedLineError(FrustrackError):
    """Label line cannot be parsed; message carries the line number."""


class TruncatedFileError(FrustrackError):
    """Binary point cloud file length is not a whole number of records."""


class UnknownSceneError(FrustrackError):
    """Scene id outside the KITTI tracking range 0..20."""


class MissingInitialGTError(FrustrackError):
    """Tracklet cannot initialise: no ground-truth box on its first frame."""


class FrameMismatchError(FrustrackError):
    """2D box stream refers to a frame outside the tracklet."""


class EmptySeriesError(FrustrackError):
    """Metric requested on an empty overlap/error series."""


class ConfigError(FrustrackError):
    """Invalid run configuration (CLI exit code 1)."""


class DataError(FrustrackError):
    """Unreadable or malformed input data (CLI exit code 2)."""
