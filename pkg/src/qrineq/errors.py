"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UnsupportedFamilyError(NotImplementedError):
    """The requested operation has no closed form for this family."""


class InsufficientDataError(ValueError):
    """The sample is too small for the requested estimator."""


class NumericError(ArithmeticError):
    """A numerical routine failed to converge to its tolerance."""


class RejectedTransferError(ValueError):
    """A transfer would move the median or break within-half ordering."""


class DataFormatError(ValueError):
    """An input file could not be parsed into the expected structure."""
