"""Exception hierarchy shared by every module of the package."""


class PolymatroidError(ValueError):
    """Base class for invalid inputs and violated preconditions."""


class WrongTableSize(PolymatroidError):
    pass


class NonZeroEmpty(PolymatroidError):
    pass


class NotSubmodular(PolymatroidError):
    """Raised with a witness pair ``(I, J)`` of subset masks."""

    def __init__(self, I, J, message=None):
        self.I = I
        self.J = J
        super().__init__(message or f"submodularity fails for masks I={I:#b}, J={J:#b}")


class DimensionMismatch(PolymatroidError):
    pass


class InvalidRank(PolymatroidError):
    pass


class VertexOutOfRange(PolymatroidError):
    pass


class NotABasis(PolymatroidError):
    pass


class PivotOutOfRange(PolymatroidError):
    pass


class GapInFiber(PolymatroidError):
    """A chain along ``e_h - e_{h+1}`` skipped an integer point."""


class CapMismatch(PolymatroidError):
    pass


class NotAMatroidRank(PolymatroidError):
    pass


class EmptyPolymatroid(PolymatroidError):
    pass


class ParseError(PolymatroidError):
    """Malformed instance input; ``field`` and ``line`` locate the problem when known."""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
