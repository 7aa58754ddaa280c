from __future__ import annotations

import logging
from dataclasses import dataclass
from dataclasses import field
from typing import Any

from rainbow.colorings.coloring import EdgeColoring
from rainbow.search.config import SearchConfig
from rainbow.search.config import SearchStatus
from rainbow.search.exceptions import SearchError
from rainbow.verification.services import verify_certificate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchStats:
    """Counters of one search run.

    ``steps_used`` is accepted moves for local search and visited nodes for
    backtracking; ``moves_evaluated`` counts every neighbor scored.
    """

    restarts_used: int = 0
    steps_used: int = 0
    moves_evaluated: int = 0
    best_objective: int | None = None
    winning_restart: int | None = None
    wall_time: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "restarts_used": self.restarts_used,
            "steps_used": self.steps_used,
            "moves_evaluated": self.moves_evaluated,
            "best_objective": self.best_objective,
            "winning_restart": self.winning_restart,
            "wall_time": round(self.wall_time, 6),
        }


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    coloring: EdgeColoring | None
    stats: SearchStats
    config: SearchConfig

    @property
    def found(self) -> bool:
        return self.status == SearchStatus.FOUND


def trivial_outcome(config: SearchConfig) -> SearchOutcome:
    logger.info(
        "K_%d has more edges than the %d colors; every coloring is rainbow-K_%d-free",
        config.q,
        config.ell,
        config.q,
    )
    return SearchOutcome(
        status=SearchStatus.TRIVIAL_INSTANCE,
        coloring=None,
        stats=SearchStats(),
        config=config,
    )


def certify(coloring: EdgeColoring, config: SearchConfig) -> None:
    """Re-verify a solution from scratch; raise :class:`SearchError` if it fails."""
    verdict = verify_certificate(coloring, config.q)
    if not verdict.accepted:
        msg = (
            f"search produced a coloring that fails verification "
            f"(balanced={verdict.balanced}, rainbow_free={verdict.rainbow_free})"
        )
        raise SearchError(msg)
