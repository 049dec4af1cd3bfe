"""Exception types raised across the package."""


class ToricRichardsonError(Exception):
    """Base class for all errors raised by this package."""


class NonemptyIntervalRequired(ToricRichardsonError, ValueError):
    """Raised when an operation needs ``v <= w`` in Bruhat order and it fails."""


class DisagreementBug(ToricRichardsonError, AssertionError):
    """The independent toricness tests disagree; this is an implementation fault."""


class MultipleCollections(ToricRichardsonError):
    """More than one NI path collection was found where uniqueness was required."""


class NotToric(ToricRichardsonError, ValueError):
    """An operation that needs a toric interval was given a non-toric one."""


class MixedRank(ToricRichardsonError, ValueError):
    """Perfect orientations of a plabic graph produced source sets of different sizes."""


class NoSolution(ToricRichardsonError):
    """An exact (integer) linear system that should be solvable is not."""


class InconsistentFace(ToricRichardsonError):
    """Two-face propagation produced conflicting vertex positions."""
