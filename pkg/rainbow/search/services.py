from rainbow.search.backtracking import backtracking_search
from rainbow.search.config import SearchConfig
from rainbow.search.config import Strategy
from rainbow.search.local import local_search
from rainbow.search.outcome import SearchOutcome
from rainbow.search.outcome import trivial_outcome


def run_search(config: SearchConfig, *, threads: int = 1) -> SearchOutcome:
    """Dispatch on ``config.strategy``; trivial instances are not searched."""
    if config.is_trivial:
        return trivial_outcome(config)
    if config.strategy == Strategy.BACKTRACKING:
        return backtracking_search(config)
    return local_search(config, threads=threads)
