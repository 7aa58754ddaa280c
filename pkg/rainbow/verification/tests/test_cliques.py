from itertools import combinations
from math import comb

import pytest

from rainbow.colorings.coloring import new_coloring
from rainbow.verification.cliques import clique_census
from rainbow.verification.cliques import count_rainbow_cliques
from rainbow.verification.cliques import find_rainbow_clique
from rainbow.verification.exceptions import ColorLimitExceeded
from rainbow.verification.exceptions import QTooLarge
from rainbow.verification.exceptions import QTooSmall


def rainbow_subsets(coloring, q):
    """Every rainbow q-subset in lexicographic order, by brute force."""
    found = []
    for subset in combinations(range(1, coloring.n + 1), q):
        colors = [coloring.color(a, b) for a, b in combinations(subset, 2)]
        if len(set(colors)) == len(colors):
            found.append(subset)
    return found


def test_k13_has_no_rainbow_k4(k13):
    report = find_rainbow_clique(k13, 4)
    assert not report.found
    assert report.witness is None
    assert report.subsets_examined == comb(13, 4)
    assert report.pruned_prefixes > 0
    assert count_rainbow_cliques(k13, 4) == 0


def test_k13_first_rainbow_triangle(k13):
    report = find_rainbow_clique(k13, 3)
    assert report.found
    assert report.witness.vertices == (1, 2, 3)
    assert report.witness.edges == ((1, 2, 2), (1, 3, 5), (2, 3, 3))
    assert report.subsets_examined == 1


@pytest.mark.parametrize("ell", [3, 4, 5, 6])
def test_scan_matches_brute_force_on_random_colorings(random_coloring, ell):
    outcomes = set()
    for _ in range(200):
        coloring = random_coloring(8, ell)
        expected = rainbow_subsets(coloring, 4)
        report = find_rainbow_clique(coloring, 4)
        assert report.found == bool(expected)
        if expected:
            assert report.witness.vertices == expected[0]
            report.witness.validate(coloring)
        else:
            assert report.subsets_examined == comb(8, 4)
        assert count_rainbow_cliques(coloring, 4) == len(expected)
        outcomes.add(report.found)
    # Below six colors K_4 cannot be rainbow; at six both outcomes occur.
    assert outcomes == ({True, False} if ell == 6 else {False})


@pytest.mark.parametrize("ell", [3, 4, 5, 6])
def test_triangle_counts_match_brute_force(random_coloring, ell):
    for _ in range(50):
        coloring = random_coloring(8, ell)
        expected = rainbow_subsets(coloring, 3)
        report, count = clique_census(coloring, 3)
        assert count == len(expected)
        assert report.found == bool(expected)


def test_census_decides_every_subset(random_coloring):
    coloring = random_coloring(9, 8)
    report, count = clique_census(coloring, 4)
    assert report.subsets_examined == comb(9, 4)
    assert count == len(rainbow_subsets(coloring, 4))


def test_every_edge_is_a_rainbow_k2(k13):
    report = find_rainbow_clique(k13, 2)
    assert report.witness.vertices == (1, 2)


def test_pigeonhole_skips_the_scan(random_coloring):
    report = find_rainbow_clique(random_coloring(6, 3), 4)
    assert not report.found
    assert report.decided_by_pigeonhole
    assert report.subsets_examined == comb(6, 4)


@pytest.mark.parametrize(("q", "error"), [(1, QTooSmall), (14, QTooLarge)])
def test_clique_size_must_fit(k13, q, error):
    with pytest.raises(error):
        find_rainbow_clique(k13, q)


def test_more_than_64_colors_are_rejected():
    coloring = new_coloring(2, 65, [[0, 65], [65, 0]])
    with pytest.raises(ColorLimitExceeded):
        find_rainbow_clique(coloring, 2)


def test_reports_do_not_depend_on_worker_count(random_coloring):
    coloring = random_coloring(10, 10)
    serial = find_rainbow_clique(coloring, 4)
    assert find_rainbow_clique(coloring, 4, threads=2) == serial
    assert clique_census(coloring, 4, threads=3) == clique_census(coloring, 4)
