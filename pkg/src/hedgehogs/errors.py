"""Exception hierarchy shared by the library and the command line."""


class HedgehogError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(HedgehogError, ValueError):
    """A parameter is outside its admissible range (e.g. ``k < 3``)."""


class DomainError(HedgehogError, ValueError):
    """Input lies outside the hypotheses of a theorem (e.g. a non-convex curve)."""


class InputError(HedgehogError, ValueError):
    """Malformed user input: curve files, expressions, sampled curves."""


class NumericalError(HedgehogError, ArithmeticError):
    """A numerical routine failed to converge or produced an inconsistent value."""


def check_k(k: int) -> int:
    if isinstance(k, bool) or int(k) != k:
        raise InvalidParameterError(f"k must be an integer, got {k!r}")
    k = int(k)
    if k < 3:
        raise InvalidParameterError(f"k must be >= 3, got {k}")
    return k
