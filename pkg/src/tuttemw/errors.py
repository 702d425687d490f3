"""Exception types shared across the package."""


class InvalidParametersError(ValueError):
    """Matroid or search parameters outside their legal range."""


class DegenerateDenominatorError(ZeroDivisionError):
    """The thickening substitution hit a zero denominator (s = 0).

    Callers that still need a value should fall back to an explicit
    rank-oracle matroid.
    """


class SizeLimitError(ValueError):
    """A brute-force operation was asked for a ground set it cannot sweep."""


class NotABasisError(ValueError):
    """The subset handed to an exchange-graph construction is not a basis."""
