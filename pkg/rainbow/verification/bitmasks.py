"""64-bit color masks shared by the scanners."""

from math import comb

import numpy as np

from rainbow.colorings.coloring import EdgeColoring
from rainbow.verification.exceptions import ColorLimitExceeded
from rainbow.verification.exceptions import QTooLarge
from rainbow.verification.exceptions import QTooSmall

MAX_COLORS = 64


def check_color_limit(coloring: EdgeColoring) -> None:
    if coloring.ell > MAX_COLORS:
        msg = f"{coloring.ell} colors exceed the supported maximum of {MAX_COLORS}"
        raise ColorLimitExceeded(msg)


def check_clique_size(coloring: EdgeColoring, q: int) -> None:
    if q < 2:  # noqa: PLR2004
        msg = f"clique size must be at least 2, got {q}"
        raise QTooSmall(msg)
    if q > coloring.n:
        msg = f"clique size {q} exceeds the {coloring.n} vertices"
        raise QTooLarge(msg)


def color_bitmasks(coloring: EdgeColoring) -> np.ndarray:
    """n x n uint64 table, bit (c - 1) set for an edge of color c, 0 on the diagonal."""
    check_color_limit(coloring)
    matrix = coloring.matrix.astype(np.int64)
    shifts = np.maximum(matrix - 1, 0).astype(np.uint64)
    bits = np.left_shift(np.uint64(1), shifts)
    bits[matrix == 0] = 0
    bits.setflags(write=False)
    return bits


def exceeds_palette(coloring: EdgeColoring, edge_count: int) -> bool:
    """True when the coloring has fewer colors than the edges that must differ."""
    return coloring.ell < edge_count


def clique_edges(q: int) -> int:
    return comb(q, 2)
