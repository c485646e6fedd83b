"""Exception types shared across the package."""


class LinkmapsError(Exception):
    """Base class for all domain errors raised by this package."""


class NotDivisible(LinkmapsError):
    """Exact division failed (nonzero remainder)."""


class NotInCone(LinkmapsError):
    """The element is not symmetric, or not divisible by the required z-power."""


class DimensionMismatch(LinkmapsError):
    """Vector/matrix/basis dimensions do not agree."""


class NotApplicable(LinkmapsError):
    """A transvection's preconditions or self-verification failed."""


class InvalidPair(LinkmapsError):
    """A candidate Kirk pair violates one of its two membership constraints."""


class InvalidPresentation(LinkmapsError):
    """Presentation data violates the pair/coefficient bookkeeping invariants."""


class KindMismatch(LinkmapsError):
    """A disk-ledger operation was given records of the wrong kind."""


class PreconditionViolated(LinkmapsError):
    """Input data does not satisfy an operation's stated hypotheses."""


class ConditionsNotMet(LinkmapsError):
    """The presentation fails the self-pairing / disk-pairing conditions."""


class ConstructionFailed(LinkmapsError):
    """No candidate isometry passed verification (never an unverified output)."""


class WitnessInvalid(LinkmapsError):
    """A supplied isometry witness failed re-verification."""


class InternalVerificationFailure(LinkmapsError):
    """An output failed its own re-check; indicates a bug, never expected."""
