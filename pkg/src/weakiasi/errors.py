"""Exception hierarchy shared by every module of the package."""


class WeakIASIError(Exception):
    """Base class for all errors raised by weakiasi."""


class InvalidParameterError(WeakIASIError, ValueError):
    pass


class DisjointnessError(WeakIASIError, ValueError):
    """Raised by join when the operands share vertex ids."""


class NotASubgraphError(WeakIASIError, ValueError):
    pass


class UnknownVertexError(WeakIASIError, KeyError):
    pass


class IncompleteLabelingError(WeakIASIError, KeyError):
    """A vertex that must carry a label has none."""


class InfeasiblePatternError(WeakIASIError, ValueError):
    """Two expanded vertices are adjacent."""


class LabelOverflowError(WeakIASIError, OverflowError):
    """A label element would exceed the 63-bit value range."""


class TooLargeInputError(WeakIASIError, ValueError):
    pass


class FormatError(WeakIASIError, ValueError):
    """Malformed graph, labeling or certificate text."""
