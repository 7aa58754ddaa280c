from itertools import permutations
from math import perm

import pytest

from rainbow.verification.cliques import count_rainbow_cliques
from rainbow.verification.embedding import count_rainbow_pattern
from rainbow.verification.embedding import find_rainbow_pattern
from rainbow.verification.exceptions import PatternTooLarge
from rainbow.verification.patterns import PatternGraph


def rainbow_embeddings(coloring, pattern):
    """Rainbow injective maps of the pattern in lexicographic order, by brute force."""
    found = []
    for images in permutations(range(1, coloring.n + 1), pattern.m):
        colors = [
            coloring.color(images[a - 1], images[b - 1]) for a, b in pattern.edges
        ]
        if len(set(colors)) == len(colors):
            found.append(images)
    return found


@pytest.mark.parametrize("text", ["c4", "1-2,2-3,3-4", "c6", "2k3"])
def test_scan_matches_brute_force(random_coloring, text):
    pattern = PatternGraph.parse(text)
    for _ in range(5):
        coloring = random_coloring(8, 6)
        expected = rainbow_embeddings(coloring, pattern)
        report = find_rainbow_pattern(coloring, pattern)
        assert report.found == bool(expected)
        if expected:
            assert report.witness.vertices == expected[0]
        else:
            assert report.subsets_examined == perm(8, pattern.m)
        census = count_rainbow_pattern(coloring, pattern)
        assert census.embeddings == len(expected)


def test_witness_lists_pattern_edges_in_order(random_coloring):
    coloring = random_coloring(8, 6)
    pattern = PatternGraph.parse("c4")
    report = find_rainbow_pattern(coloring, pattern)
    a, b, c, d = report.witness.vertices
    pairs = [tuple(sorted(pair)) for pair in [(a, b), (a, d), (b, c), (c, d)]]
    assert [(u, v) for u, v, _ in report.witness.edges] == pairs
    report.witness.validate(coloring)


def test_clique_patterns_agree_with_the_clique_scanner(random_coloring):
    for _ in range(5):
        coloring = random_coloring(7, 6)
        census = count_rainbow_pattern(coloring, PatternGraph.complete(3))
        assert census.automorphisms == 6
        assert census.copies == count_rainbow_cliques(coloring, 3)
        assert census.embeddings == 6 * census.copies


def test_k13_has_no_rainbow_k4_pattern(k13):
    report = find_rainbow_pattern(k13, PatternGraph.complete(4))
    assert not report.found
    assert report.subsets_examined == perm(13, 4)


def test_pigeonhole_on_patterns(random_coloring):
    report = find_rainbow_pattern(random_coloring(7, 5), PatternGraph.parse("c6"))
    assert report.decided_by_pigeonhole
    assert report.subsets_examined == perm(7, 6)


def test_pattern_larger_than_the_host(k13):
    with pytest.raises(PatternTooLarge):
        find_rainbow_pattern(k13, PatternGraph.complete(14))


def test_pattern_reports_do_not_depend_on_worker_count(random_coloring):
    coloring = random_coloring(9, 8)
    pattern = PatternGraph.parse("c5")
    serial = find_rainbow_pattern(coloring, pattern)
    assert find_rainbow_pattern(coloring, pattern, threads=2) == serial
    census = count_rainbow_pattern(coloring, pattern)
    assert count_rainbow_pattern(coloring, pattern, threads=2) == census


def first_rainbow_embedding(coloring, pattern):
    for images in permutations(range(1, coloring.n + 1), pattern.m):
        colors = {
            coloring.color(images[a - 1], images[b - 1]) for a, b in pattern.edges
        }
        if len(colors) == len(pattern.edges):
            return images
    return None


@pytest.mark.parametrize("text", ["c6", "2k3"])
def test_k13_patterns_match_brute_force(k13, text):
    pattern = PatternGraph.parse(text)
    expected = first_rainbow_embedding(k13, pattern)
    report = find_rainbow_pattern(k13, pattern)
    assert report.found == (expected is not None)
    if expected is not None:
        assert report.witness.vertices == expected
