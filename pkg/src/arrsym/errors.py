"""Exception hierarchy shared across the package."""


class ArrsymError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ArrsymError):
    """Malformed input text (.cfg / .plan / .arr / scalar / cycle notation)."""


class ValidationError(ArrsymError):
    """Structurally well-formed data violating a domain invariant."""


class FieldMixError(ArrsymError):
    """Arithmetic between scalars of two different quadratic fields."""


class PoleError(ArrsymError):
    """Evaluation of a rational function at a zero of its denominator."""


class DegenerateError(ArrsymError):
    """Degenerate geometric or algebraic input (zero leading coefficient,
    meet of coincident lines, join of coincident points, duplicate lines)."""


class UnsupportedDegreeError(ArrsymError):
    """Residual polynomial factor of degree >= 3 that cannot be split into
    rational roots and quadratics."""


class ConstraintError(ArrsymError):
    """Moduli-constraint derivation failed: zero or multiple admissible
    factors, or a constraint that does not disconnect the moduli."""


class RenderError(ArrsymError):
    """Arrangement cannot be drawn (no real section, bad viewport)."""
