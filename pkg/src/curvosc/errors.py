"""Exception types raised by the model and solver layers."""


class CurvoscError(ValueError):
    """Base class for all domain errors in this package."""


class PoleInSeriesError(CurvoscError):
    """A Pochhammer factor (c)_k vanishes before the series terminates."""


class NonpositiveCurvatureError(CurvoscError):
    """An operation that needs lambda > 0 was called with lambda <= 0."""


class NegativeRadiusError(CurvoscError):
    """A radial coordinate was negative."""


class SingularPointError(CurvoscError):
    """Evaluation requested at a singular point of the formula."""


class ZeroAError(CurvoscError):
    """The linear-term coefficient A vanishes, so -B/A is undefined."""


class ComplexResultError(CurvoscError):
    """A real-valued contract would have to return a complex number."""


class DegenerateDerivativeError(CurvoscError):
    """dX/dx is (numerically) zero where the potential needs to divide by it."""


class OutOfImageError(CurvoscError):
    """A point lies outside the image of the coordinate map."""


class NonpositiveWeightError(CurvoscError):
    """A Sturm-Liouville weight or leading coefficient is not positive."""


class UnresolvedError(CurvoscError):
    """Requested eigenvalues are too close to the discrete spectral edge."""


class ZeroNormError(CurvoscError):
    """Cannot normalize a vector with zero weighted norm."""


class NodeDetectedError(CurvoscError):
    """A sign change was found where a nodeless function was required."""
