"""Domain errors shared across the package.

Every failure of an exactness contract (a division that must come out even,
a tuple that must lie in a ghost image, a deformation integer that breaks a
congruence) raises one of these, so callers and the command line can tell
mathematical impossibility apart from usage mistakes.
"""


class Error(Exception):
    """Base class for domain errors raised by this package."""


class CrossRingError(Error):
    """Operands come from different rings or carry mismatched metadata."""


class NonUniqueQuotient(Error):
    """Integer division had several solutions: the ring has k-torsion."""


class IntegralityViolation(Error):
    """A division that theory guarantees to be exact failed."""


class NotInGhostImage(Error):
    """The tuple is not the ghost vector of any coordinate vector."""


class NotInImage(Error):
    """The tuple fails the congruences cutting out the ghost image of an
    inductive system."""


class PDividesQ(Error):
    """The deformation integer is divisible by the prime, so the family has
    no Frobenius congruence there."""


class NotInNormalForm(Error):
    """A one-dimensional law over a reduced ring had unexpected terms."""


class CertificationError(Error):
    """A machine check that theory says must pass did not."""


class UnsupportedRingOperation(Error):
    """The ring instance cannot decide the requested operation."""


class BudgetExceeded(Error):
    """An enumeration outgrew its configured budget."""
