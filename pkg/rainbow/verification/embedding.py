"""Rainbow copies of arbitrary small patterns.

Pattern vertices 1..m are mapped in order to distinct host vertices; because
the host is complete every injective map is a copy. A partial map is dropped
as soon as two pattern edges share a color. Candidates are tried in ascending
order, so the first rainbow map found is the lexicographically least image
tuple.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from math import perm
from typing import Any

import numpy as np

from rainbow.colorings.coloring import EdgeColoring
from rainbow.core.parallel import fan_out
from rainbow.verification.bitmasks import color_bitmasks
from rainbow.verification.bitmasks import exceeds_palette
from rainbow.verification.exceptions import PatternTooLarge
from rainbow.verification.patterns import PatternGraph
from rainbow.verification.reports import RainbowReport
from rainbow.verification.reports import RainbowWitness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PatternCount:
    """Rainbow embeddings of a pattern and the copies they represent."""

    embeddings: int
    automorphisms: int

    @property
    def copies(self) -> int:
        return self.embeddings // self.automorphisms


@dataclass
class _Partition:
    examined: int = 0
    completed: int = 0
    pruned: int = 0
    rainbow: int = 0
    witness: tuple[int, ...] | None = None


def _embed(  # noqa: PLR0913
    shared: dict[str, Any],
    images: tuple[int, ...],
    mask: np.uint64,
    free: np.ndarray,
    part: _Partition,
    *,
    first: bool,
) -> bool:
    bits = shared["bits"]
    m, n = shared["m"], shared["n"]
    i = len(images)
    earlier = shared["earlier"][i]

    if earlier:
        acc = np.bitwise_or.reduce(bits[[images[j] for j in earlier]], axis=0)
    else:
        acc = np.zeros(n, dtype=np.uint64)
    ok = free & (np.bitwise_count(acc) == len(earlier)) & ((acc & mask) == 0)

    if i + 1 == m:
        hits = np.flatnonzero(ok)
        tested = int(np.count_nonzero(free))
        if hits.size and part.witness is None:
            y = int(hits[0])
            part.witness = (*images, y)
            if first:
                reached = int(np.count_nonzero(free[: y + 1]))
                part.examined += reached
                part.completed += reached
                part.rainbow += 1
                return True
        part.examined += tested
        part.completed += tested
        part.rainbow += int(hits.size)
        return False

    dead = int(np.count_nonzero(free & ~ok))
    part.pruned += dead
    part.examined += dead * perm(n - i - 1, m - i - 1)
    for y in np.flatnonzero(ok).tolist():
        free[y] = False
        stop = _embed(
            shared,
            (*images, y),
            mask | acc[y],
            free,
            part,
            first=first,
        )
        free[y] = True
        if stop:
            return True
    return False


def _scan_partition(shared: dict[str, Any], u: int) -> _Partition:
    part = _Partition()
    free = np.ones(shared["n"], dtype=bool)
    free[u] = False
    _embed(shared, (u,), np.uint64(0), free, part, first=shared["first"])
    return part


def _check_pattern_fits(coloring: EdgeColoring, pattern: PatternGraph) -> None:
    if pattern.m > coloring.n:
        msg = f"pattern has {pattern.m} vertices but the host only {coloring.n}"
        raise PatternTooLarge(msg)


def _scan(
    coloring: EdgeColoring,
    pattern: PatternGraph,
    *,
    first: bool,
    threads: int,
) -> tuple[RainbowReport, int]:
    bits = color_bitmasks(coloring)
    _check_pattern_fits(coloring, pattern)
    n, m = coloring.n, pattern.m
    if exceeds_palette(coloring, pattern.edge_count):
        logger.info(
            "Pattern %s has %d edges but only %d colors exist; nothing to scan",
            pattern.name,
            pattern.edge_count,
            coloring.ell,
        )
        report = RainbowReport(
            found=False,
            witness=None,
            subsets_examined=perm(n, m),
            decided_by_pigeonhole=True,
        )
        return report, 0

    started = time.perf_counter()
    shared = {
        "bits": bits,
        "earlier": pattern.earlier_neighbors(),
        "m": m,
        "n": n,
        "first": first,
    }
    parts = fan_out(
        _scan_partition,
        shared,
        list(range(n)),
        threads=threads,
        stop=(lambda part: part.witness is not None) if first else None,
    )

    witness = None
    first_hit = next((p.witness for p in parts if p.witness is not None), None)
    if first_hit is not None:
        images = [v + 1 for v in first_hit]
        pairs = [(images[a - 1], images[b - 1]) for a, b in pattern.edges]
        witness = RainbowWitness.build(coloring, images, pairs)
        witness.validate(coloring)
    report = RainbowReport(
        found=witness is not None,
        witness=witness,
        subsets_examined=sum(p.examined for p in parts),
        subsets_completed=sum(p.completed for p in parts),
        pruned_prefixes=sum(p.pruned for p in parts),
    )
    logger.info(
        "Rainbow %s scan of K_%d: found=%s, %d embeddings examined in %.3fs",
        pattern.name,
        n,
        report.found,
        report.subsets_examined,
        time.perf_counter() - started,
    )
    return report, sum(p.rainbow for p in parts)


def find_rainbow_pattern(
    coloring: EdgeColoring,
    pattern: PatternGraph,
    *,
    threads: int = 1,
) -> RainbowReport:
    """Lexicographically least rainbow embedding of ``pattern``, if any."""
    report, _ = _scan(coloring, pattern, first=True, threads=threads)
    return report


def count_rainbow_pattern(
    coloring: EdgeColoring,
    pattern: PatternGraph,
    *,
    threads: int = 1,
) -> PatternCount:
    _, embeddings = _scan(coloring, pattern, first=False, threads=threads)
    return PatternCount(
        embeddings=embeddings,
        automorphisms=pattern.automorphism_count,
    )
