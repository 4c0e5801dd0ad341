"""Exception types shared across the package."""


class MatgroupsError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(MatgroupsError):
    """Bad arguments or preconditions; maps to CLI exit code 2."""


class CertificateError(MatgroupsError):
    """A numeric or combinatorial certificate failed; CLI exit code 4."""


class NonPrime(UsageError):
    """The characteristic passed to a field constructor is not prime."""


class BadPrime(UsageError):
    """A prime-valued parameter fails a congruence or range condition."""


class BadRange(UsageError):
    """An integer parameter is outside its documented range."""


class BudgetExceeded(MatgroupsError):
    """The requested computation is larger than the hard budget."""


class SpecMismatch(UsageError):
    """Operands belong to different field or group contexts."""


class DivisionByZero(UsageError, ZeroDivisionError):
    """Multiplicative inverse of zero was requested."""


class ElementNotInGroup(UsageError):
    """A matrix is not an element of the given group context."""


class NotSquarefree(UsageError):
    """A polynomial required to be squarefree has a repeated factor."""


class NotSemisimple(UsageError):
    """A matrix required to be semisimple has a non-squarefree minimal polynomial."""


class NoSuchClass(UsageError):
    """No conjugacy class of the group matches the request."""


class EigensolverDegeneracy(CertificateError):
    """Simultaneous diagonalization failed its certificates on every retry seed."""


class RoundingFailure(CertificateError):
    """A quantity that must be an integer was too far from one."""


class NoWitness(CertificateError):
    """A decomposition witness that must exist was not found."""
