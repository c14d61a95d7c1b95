"""Exception types shared across the package."""


class PolylogError(Exception):
    """Base class for all errors raised by this package."""


class NotDecodable(PolylogError):
    """Word does not encode a composition (empty, or does not end in x1)."""


class CapExceeded(PolylogError):
    """Requested weight exceeds the configured cap."""


class BadBoundary(PolylogError):
    """Word has the wrong boundary letters for a convergent zeta value."""


class OutOfRegime(PolylogError):
    """Argument lies outside the geometric summation regime |z| <= 1/2."""


class BadExponent(PolylogError):
    """Exponent outside the defined range (e.g. zeta(1) requested)."""


class BadPattern(PolylogError):
    """Argument list does not match the required (z, 1, ..., z, 1, ...) shape."""


class BadSigns(PolylogError):
    """Sign vector is not admissible (first sign must be -1)."""


class ParityError(PolylogError):
    """No closed form exists for this parity of the index sum."""


class Divergent(PolylogError):
    """The requested series diverges."""


class SingularSystem(PolylogError):
    """An exact linear system that must be solvable turned out singular."""


class ConsistencyFailure(PolylogError):
    """A stored exact value disagrees with its independent numeric check."""
