"""The search objective F = W_b * balance deviation + W_r * rainbow K_q count."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from rainbow.colorings.coloring import EdgeColoring
from rainbow.colorings.coloring import balance_profile
from rainbow.search.exceptions import InvalidConfig
from rainbow.verification.cliques import count_rainbow_cliques


@dataclass(frozen=True)
class ObjectiveValue:
    balance_deviation: int
    rainbow_count: int
    weight_balance: int = 1
    weight_rainbow: int = 1

    @property
    def total(self) -> int:
        return (
            self.weight_balance * self.balance_deviation
            + self.weight_rainbow * self.rainbow_count
        )


def balance_deviation(counts: np.ndarray, t: int) -> int:
    """Sum over vertices and colors of |counts[v, c] - t|."""
    return int(np.abs(counts - t).sum())


def objective(
    coloring: EdgeColoring,
    q: int,
    *,
    weight_balance: int = 1,
    weight_rainbow: int = 1,
) -> ObjectiveValue:
    """Score ``coloring`` from scratch; 0 exactly when it is an accepted certificate."""
    if (coloring.n - 1) % coloring.ell:
        msg = f"{coloring.ell} does not divide n - 1 = {coloring.n - 1}"
        raise InvalidConfig(msg, invariant="divisibility")
    t = (coloring.n - 1) // coloring.ell
    return ObjectiveValue(
        balance_deviation=balance_deviation(balance_profile(coloring).counts, t),
        rainbow_count=count_rainbow_cliques(coloring, q),
        weight_balance=weight_balance,
        weight_rainbow=weight_rainbow,
    )
