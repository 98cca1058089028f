"""
Exception hierarchy
"""


class HereditasError(ValueError):
    """Base class for every error raised by the workbench"""


class RingSpecError(HereditasError):
    """A ring description is malformed (not associative, bad idempotents, ...)"""


class RingMismatchError(HereditasError):
    """Operands live over different rings"""


class DimensionMismatchError(HereditasError):
    """Matrix or module shapes are incompatible"""


class UnsupportedRingError(HereditasError):
    """Operation is not available over this ring"""


class InfiniteModuleError(HereditasError):
    """Operation needs a finite module"""


class CoefficientBlowupError(HereditasError):
    """An intermediate integer exceeded the configured bit cap"""


class SearchError(HereditasError):
    """A bounded search was asked for something it cannot enumerate"""


class JobSpecError(HereditasError):
    """A job specification or report is malformed"""
