from factory import LazyAttribute
from factory.django import DjangoModelFactory

from rainbow.search.models import SearchRun


class SearchRunFactory(DjangoModelFactory[SearchRun]):
    n = 7
    ell = 6
    q = 4
    strategy = "backtracking"
    seed = 0
    config = LazyAttribute(
        lambda o: {
            "n": o.n,
            "ell": o.ell,
            "q": o.q,
            "strategy": o.strategy,
            "seed": o.seed,
            "max_restarts": 1,
            "max_steps_per_restart": 10**6,
            "plateau": 50,
        },
    )

    class Meta:
        model = SearchRun
