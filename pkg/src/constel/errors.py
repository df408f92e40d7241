"""Exception hierarchy shared by all constel modules."""


class ConstelError(Exception):
    """Base class for all errors raised by this package."""


class MalformedRational(ConstelError):
    """A pattern token could not be parsed as an exact rational."""


class TooShort(ConstelError):
    """Pattern has fewer than two points."""


class NotIncreasing(ConstelError):
    """Pattern entries are not strictly increasing."""


class BadEndpoints(ConstelError):
    """Pattern does not start at 0 or does not end at 1."""


class PatternTooShort(ConstelError):
    """Operation requires at least two gaps (k >= 2)."""


class DegeneratePair(ConstelError):
    """Endpoint pair with p == q."""


class CongruenceViolation(ConstelError):
    """Endpoints not congruent modulo the common denominator."""


class GuardExceeded(ConstelError):
    """Input size beyond the documented guard for an exact scan."""


class RangeViolation(ConstelError):
    """Integer position argument outside [0, D]."""


class ExpansionGuard(ConstelError):
    """Exact bias expansion would be too large (terms or gaps over guard)."""


class NoImprovement(ConstelError):
    """No admissible scale beats the unbiased rate; indicates an upstream bug."""
