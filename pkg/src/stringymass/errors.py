"""Exception types shared across the package."""


class StringyMassError(Exception):
    """Base class for all package-specific errors."""


class PoleError(StringyMassError):
    """A reduced rational function has a genuine pole at the evaluation point."""


class UndefinedProduct(StringyMassError):
    """Infinity times zero has no value."""


class ReflectionError(StringyMassError):
    """A closed-form mass was requested for a representation with a reflection."""


class InvalidDiscrepancy(StringyMassError):
    """A divisor discrepancy violates the log terminal bound a > -1."""


class NotCrepant(StringyMassError):
    """A crepant-only operation was applied to data with a nonzero discrepancy."""


class MissingPi0(StringyMassError):
    """Connected-component counts were requested but not supplied."""


class TooManyDivisors(StringyMassError):
    """The subset sum over divisors is capped to keep runtimes bounded."""


class WildDegree(StringyMassError):
    """The extension degree is divisible by the residue characteristic."""
