"""Exceptions and warnings raised by mutualvis."""


class MutualVisibilityError(Exception):
    """Base class for all errors raised by this package."""


class GraphSizeError(MutualVisibilityError, ValueError):
    pass


class ArgumentError(MutualVisibilityError, ValueError):
    pass


class PreconditionError(MutualVisibilityError, ValueError):
    """The graph lacks a structural property the operation relies on."""


class ConstructionError(MutualVisibilityError, RuntimeError):
    """A named graph failed validation after it was built."""


class _LineError(MutualVisibilityError, ValueError):

    def __init__(self, line, message):
        if line is None:
            super().__init__(message)
        else:
            super().__init__('line {}: {}'.format(line, message))
        self.line = line


class EdgeListError(_LineError):
    pass


class LpFormatError(_LineError):
    pass


class EnumerationRefused(MutualVisibilityError, ValueError):
    pass


class HypothesisError(MutualVisibilityError, ValueError):
    """A bound was requested for a graph outside its hypotheses."""


class BoundRangeError(MutualVisibilityError, OverflowError):
    pass


class VerificationError(MutualVisibilityError, AssertionError):

    def __init__(self, condition, message):
        super().__init__('{}: {}'.format(condition, message))
        self.condition = condition


class BoundRegimeWarning(UserWarning):
    """A bound was evaluated outside the size range it was derived for."""
