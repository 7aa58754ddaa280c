"""Lexicographic blow-ups of edge-colorings.

``lex_compose(outer, inner)`` replaces every vertex of ``outer`` by a copy of
``inner``: edges between two blocks take the outer color of the block pair,
edges inside a block take the inner color. Iterating it gives ``lex_power``,
which keeps balancedness and rainbow-K_q-freeness of the base.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

import numpy as np

from rainbow.colorings.coloring import EdgeColoring
from rainbow.colorings.coloring import new_coloring
from rainbow.colorings.exceptions import ColorCountMismatch
from rainbow.colorings.exceptions import ColoringError
from rainbow.colorings.exceptions import SizeOverflow
from rainbow.colorings.exceptions import VertexOutOfRange

logger = logging.getLogger(__name__)

DEFAULT_VERTEX_CAP = 13**3


@dataclass(frozen=True)
class PowerIndex:
    """Digits of a vertex of an n^k blow-up, outermost block first."""

    base_n: int
    k: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.digits) != self.k:
            msg = f"expected {self.k} digits, got {len(self.digits)}"
            raise ColoringError(msg)
        for d in self.digits:
            if not 1 <= d <= self.base_n:
                msg = f"digit {d} is outside 1..{self.base_n}"
                raise VertexOutOfRange(msg)

    @classmethod
    def from_vertex(cls, base_n: int, k: int, vertex: int) -> PowerIndex:
        size = base_n**k
        if not 1 <= vertex <= size:
            msg = f"vertex {vertex} is outside 1..{size}"
            raise VertexOutOfRange(msg)
        rest = vertex - 1
        digits = []
        for _ in range(k):
            rest, digit = divmod(rest, base_n)
            digits.append(digit + 1)
        return cls(base_n=base_n, k=k, digits=tuple(reversed(digits)))

    def to_vertex(self) -> int:
        value = 0
        for d in self.digits:
            value = value * self.base_n + (d - 1)
        return value + 1


def lex_compose(outer: EdgeColoring, inner: EdgeColoring) -> EdgeColoring:
    """Blow ``outer`` up by ``inner``; vertex (a, b) becomes (a - 1) * inner.n + b."""
    if outer.ell != inner.ell:
        msg = f"outer uses {outer.ell} colors but inner uses {inner.ell}"
        raise ColorCountMismatch(msg)

    m = inner.n
    between = np.kron(outer.matrix.astype(np.int64), np.ones((m, m), dtype=np.int64))
    within = np.kron(np.eye(outer.n, dtype=np.int64), inner.matrix.astype(np.int64))
    return new_coloring(outer.n * m, outer.ell, between + within)


def lex_power(
    base: EdgeColoring,
    k: int,
    *,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> EdgeColoring:
    if k < 1:
        msg = f"exponent must be at least 1, got {k}"
        raise ColoringError(msg)
    size = base.n**k
    if size > vertex_cap:
        msg = f"{base.n}^{k} = {size} vertices exceeds the cap of {vertex_cap}"
        raise SizeOverflow(msg)

    started = time.perf_counter()
    result = base
    for _ in range(k - 1):
        result = lex_compose(result, base)
    logger.info(
        "Built lexicographic power %d^%d (%d vertices) in %.3fs",
        base.n,
        k,
        result.n,
        time.perf_counter() - started,
    )
    return result
