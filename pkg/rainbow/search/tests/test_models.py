import pytest

from rainbow.colorings.coloring import recolor
from rainbow.colorings.models import Certificate
from rainbow.search.config import SearchConfig
from rainbow.search.models import SearchRun
from rainbow.search.services import run_search
from rainbow.search.tests.factories import SearchRunFactory

pytestmark = pytest.mark.django_db


def test_search_run_str():
    run = SearchRunFactory()
    assert str(run) == "K_7 ell=6 q=4 backtracking [Pending]"


def test_config_round_trips_through_the_run(k13):
    initial = Certificate.from_coloring(recolor(k13, 1, 2, 1), source="file")
    initial.save()
    config = SearchConfig(n=13, ell=6, q=4, seed=8, initial=initial.to_coloring())
    run = SearchRun.from_config(config, initial=initial)
    run.save()
    run.refresh_from_db()
    assert "initial" not in run.config
    assert run.to_config() == config


def test_record_outcome_archives_the_found_coloring(k13):
    config = SearchConfig(n=13, ell=6, q=4, seed=2, initial=recolor(k13, 5, 6, 2))
    run = SearchRun.from_config(config)
    run.save()
    run.record_outcome(run_search(config))
    run.refresh_from_db()
    assert run.status == "found"
    assert run.stats["winning_restart"] == 0
    assert run.result.source == "search"
    assert run.result.q == 4
    assert run.result.meta["seed"] == "2"
    assert run.result.to_coloring() == k13
