"""Exception types shared across the package."""


class SchwarzlabError(Exception):
    """Base class for all library errors."""


class BadParameter(SchwarzlabError):
    """A parameter lies outside its documented range."""


class OutsideDisk(SchwarzlabError):
    """An evaluation point lies outside the open unit disk."""


class DivisionByNonUnit(SchwarzlabError):
    """Series division needs a nonzero constant term in the denominator."""


class BranchPointAtCenter(SchwarzlabError):
    """log/pow of a series whose constant term vanishes."""


class NonvanishingInner(SchwarzlabError):
    """Series composition needs an inner series that vanishes at 0."""


class NonvanishingAtZero(SchwarzlabError):
    """Division by z needs a vanishing constant term."""


class VanishingDerivative(SchwarzlabError):
    """f'(z) is numerically zero; the function is not locally univalent there."""


class StencilOutsideDisk(SchwarzlabError):
    """A finite-difference stencil leaves the unit disk."""


class CenterPoint(SchwarzlabError):
    """The derivative variability check is undefined at z0 = 0."""


class CoincidentPoints(SchwarzlabError):
    """The two-point functional needs two distinct points."""


class OutOfRange(SchwarzlabError):
    """Argument outside the validity range of a bound."""
