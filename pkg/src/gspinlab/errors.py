"""Exception hierarchy shared by all gspinlab modules."""


class GspinError(Exception):
    """Base class for all domain errors raised by this package."""


# quadratic spaces
class DegenerateForm(GspinError):
    pass


class ZeroArgument(GspinError):
    pass


class ZeroEntry(GspinError):
    pass


class UnsupportedField(GspinError):
    pass


# Clifford arithmetic
class BasisMismatch(GspinError):
    pass


class NotInvertible(GspinError):
    pass


class BasisNotExtension(GspinError):
    pass


class DimensionCap(GspinError):
    pass


# structure classification
class HypothesisViolation(GspinError):
    pass


class NotSplit(GspinError):
    pass


class FormNotFound(GspinError):
    """Raised when the invariant bilinear form solve fails; indicates a bug."""


# component groups
class InvalidDecomposition(GspinError):
    pass


class TargetMismatch(GspinError):
    pass


# L-factors
class InvalidClass(GspinError):
    pass


class PoleAtS(GspinError):
    pass


class RankMismatch(GspinError):
    pass


# local periods
class SingularSatake(GspinError):
    pass


class CentralCharacterMismatch(GspinError):
    pass
