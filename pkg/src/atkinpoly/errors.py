"""Exception hierarchy shared by every module in the package."""


class AtkinError(Exception):
    """Base class for all package-specific errors."""


class DomainError(AtkinError):
    """Argument lies outside the mathematical domain of the operation."""


class NonConvergent(AtkinError):
    """A series evaluation cannot meet its tolerance (bad preconditions
    or the term cap was reached)."""


class NoConvergence(AtkinError):
    """Adaptive quadrature hit its refinement cap before converging."""


class DenominatorPole(AtkinError):
    """A denominator Pochhammer symbol vanishes inside a terminating sum."""


class DenominatorNotInvertible(AtkinError):
    """A rational coefficient has a denominator divisible by the prime."""


class ParameterDegeneracy(AtkinError):
    """Recurrence coefficients are undefined for these parameters."""


class ComplexBranch(AtkinError):
    """A real square root was requested but the discriminant is negative."""


class InvalidPrime(AtkinError):
    """The prime argument is composite or smaller than 5."""


class InternalError(AtkinError):
    """An internal consistency condition failed; indicates a bug."""


class InternalInconsistency(AtkinError):
    """Two independent computations of the same quantity disagree."""
