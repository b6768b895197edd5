"""Exception hierarchy.

Two broad families matter for callers (and for CLI exit codes): problems with
the problem statement itself (``ValidationError``) and failures of the solve
(``NumericalError``).
"""


class AuxFieldError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(AuxFieldError):
    """The system specification or quantum numbers violate an invariant."""


class InvalidExponent(ValidationError):
    """Power-law exponent outside the allowed range for the kinematics."""


class ZeroMassNonrelativistic(ValidationError):
    """Massless particles require semirelativistic kinematics."""


class WrongModeCount(ValidationError):
    """A system of N particles carries exactly N-1 internal oscillator modes."""


class InvalidCoefficient(ValidationError):
    """Sign rules on potential coefficients violated."""


class UnsupportedForm(ValidationError):
    """Potential form not usable in the requested context."""


class UnsupportedCombination(ValidationError):
    """Operation does not cover this combination of terms or masses."""


class NotSymmetric(ValidationError):
    """Eigensolver input matrix is not symmetric within tolerance."""


class SingularMasses(ValidationError):
    """Non-positive particle mass where a positive one is required."""


class NoRestoringForce(ValidationError):
    """Combined oscillator constant k + N*kbar is not positive."""


class NotClosedShell(ValidationError):
    """No integer Fermi band fills N-1 modes exactly."""


class NonPositiveSlope(ValidationError):
    """Effective linear slope a + b*sqrt(N(N-1)/2) must be positive."""


class NumericalError(AuxFieldError):
    """The solve failed: no root, collapse, no bound level, or no convergence."""


class DomainError(NumericalError):
    """Argument outside the domain of a root function."""


class NegativeDiscriminant(NumericalError):
    """Discriminant came out negative beyond rounding tolerance."""


class NoPositiveRoot(NumericalError):
    """The auxiliary-scale equation has no positive solution (collapse)."""


class NotClosedForm(AuxFieldError):
    """No closed-form expression for this exponent; numeric fallback disabled."""


class OverCritical(NumericalError):
    """Coupling beyond the critical value: square-root argument non-positive."""


class UnstableConfiguration(NumericalError):
    """Attraction/repulsion balance outside the stability window."""


class NoBoundState(NumericalError):
    """Coupling too weak to support the requested bound level."""


class NonConvergence(NumericalError):
    """Iteration budget exhausted before reaching the requested tolerance."""


class UnboundedBelow(NumericalError):
    """Variational expectation decreases without bound."""
