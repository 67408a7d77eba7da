"""Exception hierarchy for gradedbezout."""


class GradedBezoutError(Exception):
    """Base exception for all gradedbezout errors."""

    pass


class InputError(GradedBezoutError):
    """Error while parsing or validating an input file or inline JSON."""

    pass


class NonIntegralCoefficientsError(GradedBezoutError):
    """Interpolated values do not define an integer-valued polynomial."""

    pass


class DegreeNotDroppedError(GradedBezoutError):
    """A minimizing-coefficient step failed to lower the degree."""

    pass


class ZeroElementError(GradedBezoutError):
    """The zero module element has no leader."""

    pass


class NonHomogeneousInputError(GradedBezoutError):
    """A generator handed to the Groebner engine is not homogeneous."""

    pass


class UnsupportedRingError(GradedBezoutError):
    """The system cannot be completed by the commutative Groebner engine."""

    pass


class UnsupportedCodimError(GradedBezoutError):
    """No closed-form bound exists for the requested codimension."""

    pass


class MultipleOrdersUnsupportedError(GradedBezoutError):
    """Closed forms in codimension 3 and above are stated for ideals only."""

    pass


class NonForcedCoefficientError(GradedBezoutError):
    """A coefficient of the bound template was not forced by a degree drop."""

    pass
