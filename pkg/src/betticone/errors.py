"""Exception types shared across the package.

Every domain failure raises a subclass of BetticoneError so the command
line front end can catch one base class and map it to exit code 1.
"""


class BetticoneError(Exception):
    """Base class for all domain errors raised by this package."""


class NonIncreasingDegrees(BetticoneError):
    """A degree sequence was not strictly increasing."""


class InternalInconsistency(BetticoneError):
    """A twist table row was collapsed without a vanishing factor.

    Unreachable for plans built by es_plan; kept as a loud guard.
    """


class CollapsedSurvivor(BetticoneError):
    """A rank formula was applied to a row whose cohomology vanishes."""


class NoCollapsibleWindow(BetticoneError):
    """The twist list lacks the consecutive run 1..m needed to collapse."""


class NotInConeCandidate(BetticoneError):
    """Greedy decomposition stopped with a nonzero residual.

    Carries the partial decomposition; this is a diagnosis of greedy
    failure, not a certificate that the table lies outside the cone.
    """

    def __init__(self, message, decomposition=None):
        super().__init__(message)
        self.decomposition = decomposition


class NotOnHyperplane(BetticoneError):
    """Ray coefficients requested for a vector with nonzero alternating sum."""


class DegenerateSequence(BetticoneError):
    """A limit degree sequence collided with itself (needs j >= 2)."""


class NotFiniteLength(BetticoneError):
    """The module (or K-polynomial) fails the finite length criterion."""


class NotContained(BetticoneError):
    """The denominator ideal is not contained in the numerator ideal."""


class NotFiniteLengthWithinBox(BetticoneError):
    """Cokernel dimensions persist at the boundary of the largest box tried."""


class KernelNotFinitelyResolvedInBox(BetticoneError):
    """Kernel generator counts failed to stabilize inside the box."""


class BoundTooLarge(BetticoneError):
    """Enumeration box exceeds the combinatorial guard."""
