"""Exception types raised across the package."""


class KunzLatticeError(Exception):
    """Base class for every error raised by this package."""


class NotCoFinite(KunzLatticeError, ValueError):
    """The generators have a common divisor greater than one."""


class NotMinimalGenerator(KunzLatticeError, ValueError):
    pass


class KunzViolation(KunzLatticeError, ValueError):
    """A coordinate vector breaks one of the Kunz inequalities.

    ``i`` and ``j`` name the offending pair; ``j`` is ``None`` when the
    violated inequality is the upper bound ``x_i <= k_i``.
    """

    def __init__(self, message, i, j=None):
        super().__init__(message)
        self.i = i
        self.j = j


class NotAnIdeal(KunzLatticeError, ValueError):
    pass


class AmbientMismatch(KunzLatticeError, ValueError):
    pass


class IsFullIdeal(KunzLatticeError, ValueError):
    pass


class NotALattice(KunzLatticeError):
    pass


class PreconditionViolated(KunzLatticeError):
    """A claim was asked about an instance outside its hypotheses."""
