"""Exception hierarchy shared by every module of the package."""


class Springer2ColError(Exception):
    """Base class for all errors raised by springer2col."""


class ShapeError(Springer2ColError, ValueError):
    """Column lengths do not describe a two-column diagram (needs r >= s >= 0)."""


class ParseError(Springer2ColError, ValueError):
    """A tableau or shape literal is syntactically malformed."""


class ValidityError(Springer2ColError, ValueError):
    """A numbering violates the tableau rules (bijection, row or column order, shape)."""


class InternalError(Springer2ColError, RuntimeError):
    """An internal assertion failed; indicates a bug, never bad input."""


class ProofViolationError(Springer2ColError, RuntimeError):
    """A replayed proof step produced a tableau the argument says cannot occur."""


class DegenerateSampleError(Springer2ColError, RuntimeError):
    """Random sampling of an invertible centralizer element kept failing."""
