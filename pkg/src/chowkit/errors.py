"""Exception hierarchy shared by all chowkit modules.

Every exception that reports a *domain* problem (bad invariants, values
outside the supported range, inconsistent inputs) derives from
:class:`DomainError`, so callers -- in particular the command line front
end -- can distinguish domain failures from usage mistakes.
"""


class DomainError(ValueError):
    """Base class for invalid mathematical input; maps to CLI exit code 1."""


class UnsupportedDimensionError(DomainError):
    """Ambient projective dimension other than 2 or 3."""


class DimensionMismatchError(DomainError):
    """Binary operation on values living on different projective spaces."""


class IntegralityError(DomainError):
    """A quantity that must be an integer (rank, Chern class) is not."""


class RankMismatchError(DomainError):
    """Splitting type length disagrees with the rank of the character."""


class InadmissibleParameterError(DomainError):
    """Numeric parameter outside the range a formula is proved for."""


class NotRealizableError(DomainError):
    """Requested shape cannot exist (negative or fractional exponents)."""
