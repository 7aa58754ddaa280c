"""Search parameters."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from math import comb
from typing import Any

from rainbow.colorings.coloring import EdgeColoring
from rainbow.colorings.coloring import new_coloring
from rainbow.colorings.coloring import to_matrix
from rainbow.search.exceptions import InvalidConfig

DEFAULT_MAX_RESTARTS = 10
DEFAULT_MAX_STEPS = 2000
DEFAULT_PLATEAU = 50
MAX_SEED = 2**64 - 1


class Strategy(StrEnum):
    LOCAL_SEARCH = "local_search"
    BACKTRACKING = "backtracking"


class SearchStatus(StrEnum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    EXHAUSTED_BUDGET = "exhausted_budget"
    TRIVIAL_INSTANCE = "trivial_instance"


@dataclass(frozen=True)
class SearchConfig:
    """Instance (n, ell, q) plus strategy, seed and budgets.

    ``max_steps_per_restart`` bounds accepted moves per restart for local
    search and visited nodes for backtracking. With ``initial`` set, local
    search repairs that coloring instead of starting cold.
    """

    n: int
    ell: int
    q: int
    strategy: Strategy = Strategy.LOCAL_SEARCH
    seed: int = 0
    max_restarts: int = DEFAULT_MAX_RESTARTS
    max_steps_per_restart: int = DEFAULT_MAX_STEPS
    plateau: int = DEFAULT_PLATEAU
    initial: EdgeColoring | None = None
    weight_balance: int = 1
    weight_rainbow: int = 1

    def __post_init__(self) -> None:  # noqa: C901
        try:
            object.__setattr__(self, "strategy", Strategy(self.strategy))
        except ValueError:
            choices = ", ".join(s.value for s in Strategy)
            msg = f"{self.strategy!r} is not one of {choices}"
            raise InvalidConfig(msg, invariant="strategy") from None

        if self.n < 2:  # noqa: PLR2004
            msg = f"need at least 2 vertices, got {self.n}"
            raise InvalidConfig(msg, invariant="n")
        if self.ell < 1:
            msg = f"need at least 1 color, got {self.ell}"
            raise InvalidConfig(msg, invariant="ell")
        if not 2 <= self.q <= self.n:  # noqa: PLR2004
            msg = f"clique size must lie in 2..{self.n}, got {self.q}"
            raise InvalidConfig(msg, invariant="q")
        if (self.n - 1) % self.ell:
            msg = (
                f"{self.ell} does not divide n - 1 = {self.n - 1}; "
                "no balanced coloring exists"
            )
            raise InvalidConfig(msg, invariant="divisibility")
        if not 0 <= self.seed <= MAX_SEED:
            msg = f"seed must be a 64-bit unsigned integer, got {self.seed}"
            raise InvalidConfig(msg, invariant="seed")
        if self.max_restarts < 1:
            msg = f"need at least 1 restart, got {self.max_restarts}"
            raise InvalidConfig(msg, invariant="max_restarts")
        if self.max_steps_per_restart < 0 or self.plateau < 0:
            msg = "step and plateau budgets must be non-negative"
            raise InvalidConfig(msg, invariant="budget")
        if self.weight_balance < 1 or self.weight_rainbow < 1:
            msg = "objective weights must be positive integers"
            raise InvalidConfig(msg, invariant="weights")
        if self.initial is not None and (
            self.initial.n != self.n or self.initial.ell != self.ell
        ):
            msg = (
                f"initial coloring is K_{self.initial.n} with "
                f"{self.initial.ell} colors, expected K_{self.n} with {self.ell}"
            )
            raise InvalidConfig(msg, invariant="initial")

    @property
    def t(self) -> int:
        return (self.n - 1) // self.ell

    @property
    def is_trivial(self) -> bool:
        """True when K_q has more edges than there are colors."""
        return comb(self.q, 2) > self.ell

    def to_dict(self) -> dict[str, Any]:
        data = {
            "n": self.n,
            "ell": self.ell,
            "q": self.q,
            "strategy": str(self.strategy),
            "seed": self.seed,
            "max_restarts": self.max_restarts,
            "max_steps_per_restart": self.max_steps_per_restart,
            "plateau": self.plateau,
            "weight_balance": self.weight_balance,
            "weight_rainbow": self.weight_rainbow,
        }
        if self.initial is not None:
            data["initial"] = to_matrix(self.initial).tolist()
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SearchConfig:
        data = dict(data)
        matrix = data.pop("initial", None)
        initial = None
        if matrix is not None:
            initial = new_coloring(data["n"], data["ell"], matrix)
        return cls(initial=initial, **data)
