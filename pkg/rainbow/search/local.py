"""Steepest-descent local search over single-edge recolorings.

The state is a color per edge of K_n (edges in lexicographic order). For an
edge e and a color c, ``R[e, c]`` counts the q-subsets through e that would
be rainbow if e had color c and every other edge kept its color. Moving e
from a to c changes the rainbow count by ``R[e, c] - R[e, a]``, and the
balance term only through the rows of e's two endpoints, so the whole
neighborhood is scored exactly from the C(n - 2, q - 2) subsets through each
edge.

A restart applies the best move while it improves F, takes a sideways move
(delta 0) at most ``plateau`` times in a row, and stops at F = 0, at a local
minimum or when its step budget is spent. F never increases within a
restart. Ties are broken from the restart's seeded stream.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from math import comb
from typing import Any

import numpy as np

from rainbow.colorings.coloring import EdgeColoring
from rainbow.colorings.coloring import new_coloring
from rainbow.core.parallel import fan_out
from rainbow.core.rng import stream
from rainbow.search.config import SearchConfig
from rainbow.search.config import SearchStatus
from rainbow.search.config import Strategy
from rainbow.search.exceptions import InvalidConfig
from rainbow.search.objective import balance_deviation
from rainbow.search.outcome import SearchOutcome
from rainbow.search.outcome import SearchStats
from rainbow.search.outcome import certify
from rainbow.search.outcome import trivial_outcome
from rainbow.search.starts import balanced_start

logger = logging.getLogger(__name__)

MAX_TABLE_ENTRIES = 50_000_000
_BLOCKED = np.iinfo(np.int64).max


@dataclass(frozen=True)
class EdgeTables:
    """Edge numbering of K_n plus, per edge, the other edges of each q-subset on it."""

    n: int
    q: int
    endpoints: np.ndarray
    others: np.ndarray

    @property
    def edge_count(self) -> int:
        return len(self.endpoints)


def table_size(n: int, q: int) -> int:
    return comb(n, 2) * comb(n - 2, q - 2) * (comb(q, 2) - 1)


@cache
def edge_tables(n: int, q: int) -> EdgeTables:
    rows, cols = np.triu_indices(n, k=1)
    index = np.full((n, n), -1, dtype=np.intp)
    index[rows, cols] = index[cols, rows] = np.arange(rows.size)

    through = comb(n - 2, q - 2)
    width = comb(q, 2) - 1
    others = np.empty((rows.size, through, width), dtype=np.intp)
    for e, (i, j) in enumerate(zip(rows.tolist(), cols.tolist(), strict=True)):
        rest = [w for w in range(n) if w not in (i, j)]
        for k, extra in enumerate(combinations(rest, q - 2)):
            members = sorted((i, j, *extra))
            others[e, k] = [
                index[a, b] for a, b in combinations(members, 2) if (a, b) != (i, j)
            ]
    endpoints = np.stack([rows, cols], axis=1)
    for array in (endpoints, others):
        array.setflags(write=False)
    return EdgeTables(n=n, q=q, endpoints=endpoints, others=others)


@dataclass(frozen=True)
class Descent:
    """Result of one restart; ``history`` is F after each accepted move."""

    index: int
    colors: np.ndarray
    steps: int
    moves_evaluated: int
    history: tuple[int, ...]

    @property
    def final(self) -> int:
        return self.history[-1]

    @property
    def best(self) -> int:
        return min(self.history)

    @property
    def found(self) -> bool:
        return self.final == 0


class _State:
    def __init__(self, tables: EdgeTables, colors: np.ndarray, ell: int, t: int):
        self.tables = tables
        self.ell = ell
        self.t = t
        self.colors = colors.astype(np.intp)
        self.counts = np.zeros((tables.n, ell), dtype=np.int64)
        for side in (0, 1):
            np.add.at(self.counts, (tables.endpoints[:, side], self.colors), 1)
        self.rainbow_edges = comb(tables.q, 2)

    def rainbow_table(self) -> np.ndarray:
        bits = np.left_shift(np.uint64(1), self.colors.astype(np.uint64))
        acc = np.bitwise_or.reduce(bits[self.tables.others], axis=2)
        distinct = np.bitwise_count(acc) == self.rainbow_edges - 1
        shifts = np.arange(self.ell, dtype=np.uint64)
        unused = ((acc[:, :, None] >> shifts) & np.uint64(1)) == 0
        return (distinct[:, :, None] & unused).sum(axis=1)

    def balance_deltas(self) -> np.ndarray:
        """(E, ell) change of the balance term for every single-edge move."""
        t = self.t
        rows = np.arange(len(self.colors))
        total = np.zeros((len(self.colors), self.ell), dtype=np.int64)
        for side in (0, 1):
            counts = self.counts[self.tables.endpoints[:, side]]
            old = counts[rows, self.colors]
            leave = np.abs(old - 1 - t) - np.abs(old - t)
            enter = np.abs(counts + 1 - t) - np.abs(counts - t)
            total += leave[:, None] + enter
        return total

    def apply(self, e: int, color: int) -> None:
        u, v = self.tables.endpoints[e]
        old = self.colors[e]
        self.counts[u, old] -= 1
        self.counts[v, old] -= 1
        self.counts[u, color] += 1
        self.counts[v, color] += 1
        self.colors[e] = color


def descend(  # noqa: PLR0913
    tables: EdgeTables,
    colors: np.ndarray,
    config: SearchConfig,
    rng: np.random.Generator,
    *,
    index: int = 0,
) -> Descent:
    """Run one restart from the 0-based edge colors ``colors``."""
    state = _State(tables, colors, config.ell, config.t)
    rows = np.arange(tables.edge_count)
    wb, wr = config.weight_balance, config.weight_rainbow

    steps = evaluated = sideways = 0
    history = []
    while True:
        table = state.rainbow_table()
        current = table[rows, state.colors]
        value = wb * balance_deviation(state.counts, config.t) + wr * int(
            current.sum() // state.rainbow_edges,
        )
        history.append(value)
        if value == 0 or steps >= config.max_steps_per_restart or config.ell == 1:
            break

        delta = wb * state.balance_deltas() + wr * (table - current[:, None])
        delta[rows, state.colors] = _BLOCKED
        evaluated += tables.edge_count * (config.ell - 1)
        best = int(delta.min())
        if best > 0 or (best == 0 and sideways >= config.plateau):
            break
        ties = np.flatnonzero(delta.ravel() == best)
        pick = int(ties[rng.integers(ties.size)])
        e, color = divmod(pick, config.ell)
        state.apply(e, color)
        steps += 1
        sideways = sideways + 1 if best == 0 else 0

    logger.debug(
        "Restart %d: F %d -> %d in %d steps",
        index,
        history[0],
        history[-1],
        steps,
    )
    return Descent(
        index=index,
        colors=state.colors.copy(),
        steps=steps,
        moves_evaluated=evaluated,
        history=tuple(history),
    )


def _edge_colors(matrix: np.ndarray) -> np.ndarray:
    rows, cols = np.triu_indices(matrix.shape[0], k=1)
    return np.asarray(matrix)[rows, cols].astype(np.intp) - 1


def _coloring_from_edges(n: int, ell: int, colors: np.ndarray) -> EdgeColoring:
    matrix = np.zeros((n, n), dtype=np.int64)
    rows, cols = np.triu_indices(n, k=1)
    matrix[rows, cols] = matrix[cols, rows] = colors + 1
    return new_coloring(n, ell, matrix)


def _restart(shared: dict[str, Any], index: int) -> Descent:
    config: SearchConfig = shared["config"]
    rng = stream(config.seed, index)
    if config.initial is not None:
        start = _edge_colors(config.initial.matrix)
    else:
        start = _edge_colors(balanced_start(config.n, config.ell, rng))
    tables = edge_tables(config.n, config.q)
    return descend(tables, start, config, rng, index=index)


def local_search(config: SearchConfig, *, threads: int = 1) -> SearchOutcome:
    """Budgeted steepest descent with restarts; a found coloring is re-verified.

    Restart r draws from ``stream(seed, r)``. In repair mode every restart
    starts from ``config.initial`` and restarts differ only in tie-breaking;
    otherwise each starts from a fresh random balanced coloring.
    """
    if config.strategy != Strategy.LOCAL_SEARCH:
        msg = f"strategy is {config.strategy}, not local_search"
        raise InvalidConfig(msg, invariant="strategy")
    if config.is_trivial:
        return trivial_outcome(config)
    size = table_size(config.n, config.q)
    if size > MAX_TABLE_ENTRIES:
        msg = (
            f"K_{config.n} with q={config.q} needs {size} subset entries, "
            f"more than the {MAX_TABLE_ENTRIES} local search supports"
        )
        raise InvalidConfig(msg, invariant="size")

    started = time.perf_counter()
    descents = fan_out(
        _restart,
        {"config": config},
        list(range(config.max_restarts)),
        threads=threads,
        stop=lambda descent: descent.found,
    )
    winner = next((d for d in descents if d.found), None)
    stats = SearchStats(
        restarts_used=len(descents),
        steps_used=sum(d.steps for d in descents),
        moves_evaluated=sum(d.moves_evaluated for d in descents),
        best_objective=min(d.best for d in descents),
        winning_restart=winner.index if winner else None,
        wall_time=time.perf_counter() - started,
    )

    coloring = None
    status = SearchStatus.EXHAUSTED_BUDGET
    if winner is not None:
        coloring = _coloring_from_edges(config.n, config.ell, winner.colors)
        certify(coloring, config)
        status = SearchStatus.FOUND
    logger.info(
        "Local search K_%d, %d colors, q=%d, seed %d: %s after %d restarts "
        "and %d steps (best F=%d) in %.3fs",
        config.n,
        config.ell,
        config.q,
        config.seed,
        status,
        stats.restarts_used,
        stats.steps_used,
        stats.best_objective,
        stats.wall_time,
    )
    return SearchOutcome(status=status, coloring=coloring, stats=stats, config=config)
