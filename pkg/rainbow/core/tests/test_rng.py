import pytest

from rainbow.core.rng import stream


def test_streams_are_keyed_by_seed_and_index():
    assert stream(7, 0).integers(1 << 30) == stream(7, 0).integers(1 << 30)
    draws = {int(stream(7, index).integers(1 << 60)) for index in range(10)}
    assert len(draws) == 10


def test_negative_seed():
    with pytest.raises(ValueError, match="non-negative"):
        stream(-1)
