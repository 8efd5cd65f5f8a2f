"""Exception types shared across the package."""


class F5LabError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRange(F5LabError):
    """A vertex index or numeric parameter is outside its allowed range."""


class DegenerateEdge(F5LabError):
    """An edge repeats a vertex (a loop, or a triple with < 3 distinct vertices)."""


class SameVertex(F5LabError):
    """Two vertex arguments that must differ are equal."""


class SizeLimit(F5LabError):
    """Instance exceeds the configured cap for an exact (exponential-time) routine."""


class NotRegular(F5LabError):
    """A graph required to be regular is not."""


class PreconditionViolated(F5LabError):
    """A numeric precondition (e.g. min z_i >= z0 >= 0) does not hold."""


class BadPartition(F5LabError):
    """Requested part sizes are inconsistent with the vertex count."""


class DimensionTooSmall(F5LabError):
    """Matrix dimension below the smallest well-defined size."""


class ParseError(F5LabError):
    """Malformed `.3g` / `.g` / JSON input (bad counts, duplicates, bad vertex ids)."""
