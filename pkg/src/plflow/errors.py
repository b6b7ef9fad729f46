"""Exception hierarchy shared by all plflow modules.

The CLI maps these onto its exit-code contract: format errors exit 2,
parameter/usage errors exit 3, degenerate inputs exit 4.
"""


class PLFlowError(Exception):
    """Base class for all errors raised by plflow."""


class DimensionError(PLFlowError):
    """Shape or length mismatch between related arguments."""


class ParameterError(PLFlowError):
    """A parameter value violates its contract (sign, range, enum)."""


class NumericError(PLFlowError):
    """Non-finite data, domain violations, or numeric overflow."""


class DegenerateInputError(PLFlowError):
    """Input is structurally valid but empty or otherwise unusable."""


class FormatError(PLFlowError):
    """A file does not conform to its on-disk format."""
