"""Exception hierarchy shared by all modules.

Every failure mode that is part of an operation's contract gets its own
class so callers (and the CLI exit-code mapping) can react precisely.
"""


class RamcxError(Exception):
    """Base class for all library errors."""


class SpecMismatch(RamcxError):
    """Operands belong to different field/ring specifications."""


class ZeroInverse(RamcxError):
    """Multiplicative inverse of zero requested."""


class DivisionByZeroPoly(RamcxError):
    """Polynomial division by the zero polynomial."""


class NonUnit(RamcxError):
    """Inverse of a non-invertible residue in a local ring."""


class TraceZero(RamcxError):
    """The chosen twisting element has zero trace."""


class ZeroU(RamcxError):
    """Generator conjugation requested for u = 0."""


class NotInvertible(RamcxError):
    """Algebra element has no implemented closed-form inverse."""


class NormNotOne(RamcxError):
    """A norm-one element was required."""


class DegenerateD2(RamcxError):
    """Pair completion is undefined for d = 2 (inverse rule applies instead)."""


class NotCharPower(RamcxError):
    """d is not a power of the field characteristic."""


class NoSuitableAlpha(RamcxError):
    """The ideal-selection scan exhausted all candidates."""

    def __init__(self, scanned: int, message: str = ""):
        self.scanned = scanned
        super().__init__(message or f"no suitable alpha found ({scanned} candidates scanned)")


class NonUnitDenominator(RamcxError):
    """1 + y(x) is not invertible modulo the chosen ideal."""


class UnsupportedParams(RamcxError):
    """Parameter combination outside the supported theory (e.g. s > 1 with gcd(d, q) > 1)."""


class SingularMatrix(RamcxError):
    """Projective canonical form requested for a non-invertible matrix."""


class CapExceeded(RamcxError):
    """Group closure grew past the configured element cap."""

    def __init__(self, reached: int, cap: int):
        self.reached = reached
        self.cap = cap
        super().__init__(f"closure exceeded cap: {reached} elements reached (cap {cap})")


class InconsistentColoring(RamcxError):
    """Edge colors contradict the vertex coloring (implementation bug signal)."""


class DenseCapExceeded(RamcxError):
    """Dense spectral path requested beyond its vertex cap."""


class NonCommutingOperators(RamcxError):
    """Hecke operators failed the exact commutation check (implementation bug signal)."""
