"""Immutable edge-colorings of complete graphs and their balance accounting.

Vertices are 1-based and colors run over 1..ell everywhere outside this
module; 0 is reserved for the diagonal of the matrix form.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from dataclasses import field
from typing import Any

import networkx as nx
import numpy as np

from rainbow.colorings.exceptions import AsymmetricMatrix
from rainbow.colorings.exceptions import BadDiagonal
from rainbow.colorings.exceptions import ColorOutOfRange
from rainbow.colorings.exceptions import SelfLoop
from rainbow.colorings.exceptions import ShapeMismatch
from rainbow.colorings.exceptions import VertexOutOfRange


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """A total, symmetric assignment of colors 1..ell to the edges of K_n.

    Build instances with :func:`new_coloring`; the stored ``matrix`` is a
    read-only n x n array with 0 on the diagonal.
    """

    n: int
    ell: int
    matrix: np.ndarray = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (
            self.n == other.n
            and self.ell == other.ell
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.ell, self.matrix.tobytes()))

    @property
    def edge_count(self) -> int:
        return self.n * (self.n - 1) // 2

    def color(self, u: int, v: int) -> int:
        return color_of(self, u, v)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, color)`` for every edge, u < v, in lexicographic order."""
        rows, cols = np.triu_indices(self.n, k=1)
        for i, j in zip(rows.tolist(), cols.tolist(), strict=True):
            yield i + 1, j + 1, int(self.matrix[i, j])


@dataclass(frozen=True, eq=False)
class BalanceProfile:
    """Per-vertex, per-color incidence counts of a coloring.

    ``counts[v - 1, c - 1]`` is the number of edges at vertex v with color c.
    ``uniform_t`` is set only when every entry equals (n - 1) / ell.
    """

    counts: np.ndarray = field(repr=False)
    uniform_t: int | None

    @property
    def is_uniform(self) -> bool:
        return self.uniform_t is not None

    def count(self, v: int, c: int) -> int:
        return int(self.counts[v - 1, c - 1])

    def unbalanced_vertices(self) -> list[int]:
        """Vertices (1-based) that do not see every color equally often."""
        rows = self.counts.max(axis=1) != self.counts.min(axis=1)
        return [int(v) + 1 for v in np.flatnonzero(rows)]


def new_coloring(n: int, ell: int, entries: Any) -> EdgeColoring:
    """Validate an n x n integer matrix and wrap it as an :class:`EdgeColoring`.

    Checks run in a fixed order (shape, diagonal, color range, symmetry) and
    the first violation is raised. Nothing is repaired.
    """
    if n < 1:
        msg = f"vertex count must be positive, got {n}"
        raise ShapeMismatch(msg)
    if ell < 1:
        msg = f"color count must be positive, got {ell}"
        raise ColorOutOfRange(msg)

    try:
        raw = np.asarray(entries)
    except ValueError as exc:
        msg = f"matrix rows have unequal lengths; expected {n} x {n}"
        raise ShapeMismatch(msg) from exc
    if raw.size and raw.dtype.kind not in "iu":
        msg = f"matrix entries must be integers, got dtype {raw.dtype}"
        raise ShapeMismatch(msg)
    if raw.shape != (n, n):
        msg = f"matrix has shape {raw.shape}, expected ({n}, {n})"
        raise ShapeMismatch(msg)

    table = raw.astype(np.int64)
    diagonal = np.diagonal(table)
    bad = np.flatnonzero(diagonal)
    if bad.size:
        v = int(bad[0])
        msg = f"diagonal entry ({v + 1},{v + 1}) is {diagonal[v]}, expected 0"
        raise BadDiagonal(msg)

    off_diagonal = ~np.eye(n, dtype=bool)
    out_of_range = off_diagonal & ((table < 1) | (table > ell))
    if out_of_range.any():
        i, j = (int(x) for x in np.argwhere(out_of_range)[0])
        msg = f"entry ({i + 1},{j + 1}) is {table[i, j]}; colors must lie in 1..{ell}"
        raise ColorOutOfRange(msg)

    asymmetric = table != table.T
    if asymmetric.any():
        i, j = (int(x) for x in np.argwhere(asymmetric)[0])
        msg = (
            f"entry ({i + 1},{j + 1}) is {table[i, j]} "
            f"but entry ({j + 1},{i + 1}) is {table[j, i]}"
        )
        raise AsymmetricMatrix(msg)

    matrix = table.astype(np.min_scalar_type(ell))
    matrix.setflags(write=False)
    return EdgeColoring(n=n, ell=ell, matrix=matrix)


def _check_pair(coloring: EdgeColoring, u: int, v: int) -> None:
    for w in (u, v):
        if not 1 <= w <= coloring.n:
            msg = f"vertex {w} is outside 1..{coloring.n}"
            raise VertexOutOfRange(msg)
    if u == v:
        msg = f"{{{u},{v}}} is a loop; the diagonal carries no color"
        raise SelfLoop(msg)


def color_of(coloring: EdgeColoring, u: int, v: int) -> int:
    _check_pair(coloring, u, v)
    return int(coloring.matrix[u - 1, v - 1])


def balance_profile(coloring: EdgeColoring) -> BalanceProfile:
    n, ell = coloring.n, coloring.ell
    width = ell + 1
    # Row v counts into bins v * width + c; bin offset 0 is the diagonal.
    shifted = coloring.matrix.astype(np.int64) + np.arange(n)[:, None] * width
    counts = np.bincount(shifted.ravel(), minlength=n * width).reshape(n, width)
    counts = counts[:, 1:].astype(np.int64)
    counts.setflags(write=False)

    uniform_t = None
    degree = n - 1
    if degree % ell == 0:
        t = degree // ell
        if bool((counts == t).all()):
            uniform_t = t
    return BalanceProfile(counts=counts, uniform_t=uniform_t)


def is_balanced(coloring: EdgeColoring) -> bool:
    return balance_profile(coloring).is_uniform


def to_matrix(coloring: EdgeColoring) -> np.ndarray:
    """Writable int64 copy of the matrix form (inverse of :func:`new_coloring`)."""
    return coloring.matrix.astype(np.int64)


def recolor(coloring: EdgeColoring, u: int, v: int, color: int) -> EdgeColoring:
    """Return a copy of ``coloring`` with edge {u, v} set to ``color``."""
    _check_pair(coloring, u, v)
    if not 1 <= color <= coloring.ell:
        msg = f"color {color} is outside 1..{coloring.ell}"
        raise ColorOutOfRange(msg)
    table = to_matrix(coloring)
    table[u - 1, v - 1] = table[v - 1, u - 1] = color
    return new_coloring(coloring.n, coloring.ell, table)


def color_classes(coloring: EdgeColoring) -> dict[int, list[tuple[int, int]]]:
    """Edges of each color, keyed 1..ell, each list in lexicographic order."""
    classes: dict[int, list[tuple[int, int]]] = {
        c: [] for c in range(1, coloring.ell + 1)
    }
    for u, v, c in coloring.edges():
        classes[c].append((u, v))
    return classes


def to_networkx(coloring: EdgeColoring) -> nx.Graph:
    graph = nx.Graph(ell=coloring.ell)
    graph.add_nodes_from(range(1, coloring.n + 1))
    graph.add_edges_from((u, v, {"color": c}) for u, v, c in coloring.edges())
    return graph
