from rainbow.core.parallel import fan_out


def scale(shared, item):
    return shared["factor"] * item


def test_results_come_back_in_item_order():
    items = list(range(20))
    expected = [3 * i for i in items]
    assert fan_out(scale, {"factor": 3}, items) == expected
    assert fan_out(scale, {"factor": 3}, items, threads=4) == expected


def test_results_are_cut_after_the_first_stop():
    items = [5, 1, 7, 2, 8]
    for threads in (1, 3):
        results = fan_out(
            scale,
            {"factor": 1},
            items,
            threads=threads,
            stop=lambda value: value > 6,
        )
        assert results == [5, 1, 7]


def test_empty_input():
    assert fan_out(scale, {"factor": 1}, [], threads=4) == []
