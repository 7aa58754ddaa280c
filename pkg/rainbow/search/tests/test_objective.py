import numpy as np
import pytest

from rainbow.colorings.coloring import new_coloring
from rainbow.colorings.coloring import recolor
from rainbow.search.exceptions import InvalidConfig
from rainbow.search.objective import objective
from rainbow.search.starts import balanced_start
from rainbow.verification.cliques import count_rainbow_cliques
from rainbow.verification.services import verify_certificate


def test_certificate_scores_zero(k13):
    value = objective(k13, 4)
    assert value.balance_deviation == 0
    assert value.rainbow_count == 0
    assert value.total == 0


def test_one_recolored_edge_costs_four_balance_units(k13):
    perturbed = recolor(k13, 1, 2, 1)
    value = objective(perturbed, 4, weight_balance=3, weight_rainbow=2)
    assert value.balance_deviation == 4
    assert value.rainbow_count == count_rainbow_cliques(perturbed, 4)
    assert value.total == 12 + 2 * value.rainbow_count


def test_objective_needs_divisibility(random_coloring):
    with pytest.raises(InvalidConfig) as excinfo:
        objective(random_coloring(12, 5), 4)
    assert excinfo.value.invariant == "divisibility"


@pytest.mark.parametrize("q", [3, 4])
def test_zero_objective_exactly_when_verification_accepts(
    k13,
    rng,
    random_coloring,
    q,
):
    monochromatic = new_coloring(8, 1, 1 - np.eye(8, dtype=np.int64))
    candidates = [k13, monochromatic]
    for _ in range(40):
        candidates.append(random_coloring(8, 7))
        candidates.append(new_coloring(8, 7, balanced_start(8, 7, rng)))
    for coloring in candidates:
        zero = objective(coloring, q).total == 0
        assert zero == verify_certificate(coloring, q).accepted
