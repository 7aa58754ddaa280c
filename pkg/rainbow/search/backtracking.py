"""Exact depth-first search for balanced rainbow-K_q-free colorings.

Edges are colored in lexicographic order (min endpoint, max endpoint) with
colors tried in increasing order. Two constraints are enforced at every node:

- no vertex sees a color more than t = (n - 1) / ell times, which forces
  exact balance once every edge is colored;
- coloring {u, v} must not complete a rainbow K_q. The K_q completed by
  {u, v} are exactly u, v plus q - 2 vertices below u.

Vertex 1 is fixed to 1^t 2^t ... ell^t. Any solution can be relabeled to
this form, so fixing it loses nothing; it also puts the first occurrences
of the colors in increasing order, which removes the color permutations.
Running out of choices therefore proves that no solution exists.
"""

from __future__ import annotations

import logging
import time
from functools import cache
from itertools import combinations
from math import comb

import numpy as np

from rainbow.colorings.coloring import new_coloring
from rainbow.search.config import SearchConfig
from rainbow.search.config import SearchStatus
from rainbow.search.config import Strategy
from rainbow.search.exceptions import InvalidConfig
from rainbow.search.outcome import SearchOutcome
from rainbow.search.outcome import SearchStats
from rainbow.search.outcome import certify
from rainbow.search.outcome import trivial_outcome

logger = logging.getLogger(__name__)


@cache
def _lower_subsets(u: int, size: int) -> np.ndarray:
    """Rows ``(*T, u)`` for every T of ``size`` vertices below u."""
    rows = [(*extra, u) for extra in combinations(range(u), size)]
    return np.array(rows, dtype=np.intp).reshape(len(rows), size + 1)


class _Board:
    def __init__(self, n: int, ell: int, q: int):
        self.n = n
        self.ell = ell
        self.q = q
        self.t = (n - 1) // ell
        self.colors = np.zeros((n, n), dtype=np.int64)
        self.bits = np.zeros((n, n), dtype=np.uint64)
        self.counts = np.zeros((n, ell), dtype=np.int64)
        self.full = np.uint64((1 << ell) - 1)

    def rainbow_blocked(self, u: int, v: int) -> np.uint64:
        """Colors that would complete a rainbow K_q if given to edge {u, v}."""
        members = _lower_subsets(u, self.q - 2)
        if members.shape[0] == 0:
            return np.uint64(0)
        bits = self.bits
        acc = np.zeros(members.shape[0], dtype=np.uint64)
        for a, b in combinations(range(self.q - 1), 2):
            acc |= bits[members[:, a], members[:, b]]
        for a in range(self.q - 2):
            acc |= bits[members[:, a], v]
        distinct = np.bitwise_count(acc) == comb(self.q, 2) - 1
        if not distinct.any():
            return np.uint64(0)
        return np.bitwise_or.reduce(~acc[distinct] & self.full)

    def allowed(self, u: int, v: int, color: int, blocked: np.uint64) -> bool:
        if self.counts[u, color] >= self.t or self.counts[v, color] >= self.t:
            return False
        return not (int(blocked) >> color) & 1

    def assign(self, u: int, v: int, color: int) -> None:
        self.colors[u, v] = self.colors[v, u] = color + 1
        self.bits[u, v] = self.bits[v, u] = np.uint64(1) << np.uint64(color)
        self.counts[u, color] += 1
        self.counts[v, color] += 1

    def clear(self, u: int, v: int) -> None:
        color = int(self.colors[u, v]) - 1
        self.colors[u, v] = self.colors[v, u] = 0
        self.bits[u, v] = self.bits[v, u] = 0
        self.counts[u, color] -= 1
        self.counts[v, color] -= 1


def _fix_first_row(board: _Board) -> bool:
    """Color {1, j} with the sorted multiset 1^t ... ell^t; False if that fails."""
    for j in range(1, board.n):
        color = (j - 1) // board.t
        blocked = board.rainbow_blocked(0, j)
        if not board.allowed(0, j, color, blocked):
            return False
        board.assign(0, j, color)
    return True


def backtracking_search(config: SearchConfig) -> SearchOutcome:
    """Depth-first search with a node budget of ``max_steps_per_restart``."""
    if config.strategy != Strategy.BACKTRACKING:
        msg = f"strategy is {config.strategy}, not backtracking"
        raise InvalidConfig(msg, invariant="strategy")
    if config.is_trivial:
        return trivial_outcome(config)

    started = time.perf_counter()
    n, ell = config.n, config.ell
    board = _Board(n, ell, config.q)
    order = [(u, v) for u in range(1, n) for v in range(u + 1, n)]
    budget = config.max_steps_per_restart

    nodes = 0
    status = SearchStatus.EXHAUSTED
    if _fix_first_row(board):
        status = None
        next_color = [0] * (len(order) + 1)
        blocked: list[np.uint64] = [np.uint64(0)] * len(order)
        pos = 0
        while status is None:
            if pos == len(order):
                status = SearchStatus.FOUND
                break
            u, v = order[pos]
            if next_color[pos] == 0:
                blocked[pos] = board.rainbow_blocked(u, v)
            color = next_color[pos]
            while color < ell and not board.allowed(u, v, color, blocked[pos]):
                color += 1
            if color < ell:
                if nodes >= budget:
                    status = SearchStatus.EXHAUSTED_BUDGET
                    break
                nodes += 1
                board.assign(u, v, color)
                next_color[pos] = color + 1
                pos += 1
                next_color[pos] = 0
                continue
            next_color[pos] = 0
            pos -= 1
            if pos < 0:
                status = SearchStatus.EXHAUSTED
                break
            board.clear(*order[pos])

    coloring = None
    if status == SearchStatus.FOUND:
        coloring = new_coloring(n, ell, board.colors)
        certify(coloring, config)
    stats = SearchStats(
        restarts_used=1,
        steps_used=nodes,
        moves_evaluated=nodes,
        best_objective=0 if coloring is not None else None,
        winning_restart=0 if coloring is not None else None,
        wall_time=time.perf_counter() - started,
    )
    logger.info(
        "Backtracking K_%d, %d colors, q=%d: %s after %d nodes in %.3fs",
        n,
        ell,
        config.q,
        status,
        nodes,
        stats.wall_time,
    )
    return SearchOutcome(status=status, coloring=coloring, stats=stats, config=config)
