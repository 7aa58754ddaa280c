"""Seeded random sampling of q-subsets.

Samples are drawn in fixed-size chunks. Chunk k takes its numbers from
``stream(seed, k)``, so the subsets drawn, and therefore the report, depend
only on the coloring, ``q``, ``samples``, ``seed`` and the chunk size.

Within a chunk, q vertices are drawn independently and uniformly; rows with
a repeated vertex are rejected and the survivors kept in draw order. Sorting
a row gives a uniform random q-subset.
"""

from __future__ import annotations

import logging
import math
import time
from itertools import combinations
from typing import Any

import numpy as np

from rainbow.colorings.coloring import EdgeColoring
from rainbow.core.parallel import fan_out
from rainbow.core.rng import stream
from rainbow.verification.bitmasks import check_clique_size
from rainbow.verification.bitmasks import clique_edges
from rainbow.verification.bitmasks import color_bitmasks
from rainbow.verification.bitmasks import exceeds_palette
from rainbow.verification.exceptions import InvalidSampleCount
from rainbow.verification.reports import RainbowReport
from rainbow.verification.reports import RainbowWitness
from rainbow.verification.reports import ScanMode

logger = logging.getLogger(__name__)

DEFAULT_CHUNK = 65536
_MAX_BATCH = 1 << 18


def draw_subsets(rng: np.random.Generator, n: int, q: int, size: int) -> np.ndarray:
    """``size`` uniform random q-subsets of 0..n-1, one ascending row each."""
    accept = math.perm(n, q) / n**q
    rows: list[np.ndarray] = []
    have = 0
    while have < size:
        need = size - have
        rows_drawn = min(int(need / accept) + 16, _MAX_BATCH)
        batch = rng.integers(0, n, size=(rows_drawn, q))
        batch.sort(axis=1)
        distinct = (np.diff(batch, axis=1) != 0).all(axis=1)
        kept = batch[distinct][:need]
        rows.append(kept)
        have += len(kept)
    return np.concatenate(rows)


def _sample_chunk(
    shared: dict[str, Any],
    item: tuple[int, int],
) -> tuple[int, tuple[int, ...]] | None:
    index, size = item
    bits, q = shared["bits"], shared["q"]
    subsets = draw_subsets(stream(shared["seed"], index), bits.shape[0], q, size)
    acc = np.zeros(size, dtype=np.uint64)
    for a, b in combinations(range(q), 2):
        acc |= bits[subsets[:, a], subsets[:, b]]
    hits = np.flatnonzero(np.bitwise_count(acc) == clique_edges(q))
    if not hits.size:
        return None
    j = int(hits[0])
    return j, tuple(int(v) for v in subsets[j])


def sample_verify(  # noqa: PLR0913
    coloring: EdgeColoring,
    q: int,
    samples: int,
    seed: int,
    *,
    threads: int = 1,
    chunk: int = DEFAULT_CHUNK,
) -> RainbowReport:
    """Test ``samples`` seeded random q-subsets and report the first rainbow one."""
    if samples < 1:
        msg = f"sample count must be at least 1, got {samples}"
        raise InvalidSampleCount(msg)
    if chunk < 1:
        msg = f"chunk size must be at least 1, got {chunk}"
        raise InvalidSampleCount(msg)
    if seed < 0:
        msg = f"seed must be a non-negative integer, got {seed}"
        raise InvalidSampleCount(msg)
    bits = color_bitmasks(coloring)
    check_clique_size(coloring, q)

    if exceeds_palette(coloring, clique_edges(q)):
        logger.info(
            "K_%d cannot be rainbow with %d colors; no samples drawn",
            q,
            coloring.ell,
        )
        return RainbowReport(
            found=False,
            witness=None,
            subsets_examined=0,
            mode=ScanMode.SAMPLED,
            sample_count=samples,
            seed=seed,
            decided_by_pigeonhole=True,
        )

    started = time.perf_counter()
    chunks = [
        (index, min(chunk, samples - index * chunk))
        for index in range(math.ceil(samples / chunk))
    ]
    results = fan_out(
        _sample_chunk,
        {"bits": bits, "q": q, "seed": seed},
        chunks,
        threads=threads,
        stop=lambda hit: hit is not None,
    )

    witness = None
    examined = samples
    for (index, _), hit in zip(chunks, results, strict=False):
        if hit is not None:
            j, vertices = hit
            examined = index * chunk + j + 1
            witness = RainbowWitness.for_clique(coloring, [v + 1 for v in vertices])
            witness.validate(coloring)
            break

    logger.info(
        "Sampled %d of %d random %d-subsets of K_%d (seed %d): found=%s in %.3fs",
        examined,
        samples,
        q,
        coloring.n,
        seed,
        witness is not None,
        time.perf_counter() - started,
    )
    return RainbowReport(
        found=witness is not None,
        witness=witness,
        subsets_examined=examined,
        subsets_completed=examined,
        mode=ScanMode.SAMPLED,
        sample_count=samples,
        seed=seed,
    )
