"""Errors raised while building, reading and writing edge-colorings."""


class ColoringError(ValueError):
    """Base class for every coloring error."""


class ShapeMismatch(ColoringError):
    pass


class BadDiagonal(ColoringError):
    pass


class ColorOutOfRange(ColoringError):
    pass


class AsymmetricMatrix(ColoringError):
    pass


class SelfLoop(ColoringError):
    pass


class VertexOutOfRange(ColoringError):
    pass


class ColorCountMismatch(ColoringError):
    pass


class SizeOverflow(ColoringError):
    """The requested construction would exceed the configured vertex cap."""


class ParseError(ColoringError):
    """A certificate or matrix file could not be turned into a coloring."""


class UnknownCertificate(ColoringError):
    pass


class PaletteExhausted(ColoringError):
    """More colors than named palette entries."""
