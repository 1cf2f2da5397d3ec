"""Exception types shared across the package."""


class BmboundError(Exception):
    """Base class for every error raised by bmbound."""


class NotPrimePower(BmboundError, ValueError):
    """The field size q is not a prime power."""


class EvenOrSmallN(BmboundError, ValueError):
    """The tower index n is even or smaller than 3."""


class ParamOverflow(BmboundError, OverflowError):
    """A derived quantity does not fit in a signed 64-bit integer."""


class EmptyGenerators(BmboundError, ValueError):
    """A semigroup was requested with no generators."""


class NonCoprimeGenerators(BmboundError, ValueError):
    """Semigroup generators with gcd > 1 have an infinite gap set."""


class InsufficientSieveBound(BmboundError, ValueError):
    """A membership query reaches beyond the sieved range."""


class DegreeOutOfRange(BmboundError, ValueError):
    """Divisor degree outside [0, delta_cap), where the dual dimension formula holds."""


class WindowTooLarge(BmboundError, ValueError):
    """Brute-force window wider than one period of the two-point semigroup."""
