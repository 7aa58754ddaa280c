import numpy as np
import pytest

from rainbow.colorings.certificates import K13_MATRIX
from rainbow.colorings.certificates import get_certificate
from rainbow.colorings.coloring import balance_profile
from rainbow.colorings.coloring import color_classes
from rainbow.colorings.coloring import color_of
from rainbow.colorings.coloring import is_balanced
from rainbow.colorings.coloring import new_coloring
from rainbow.colorings.coloring import recolor
from rainbow.colorings.coloring import to_matrix
from rainbow.colorings.coloring import to_networkx
from rainbow.colorings.exceptions import AsymmetricMatrix
from rainbow.colorings.exceptions import BadDiagonal
from rainbow.colorings.exceptions import ColorOutOfRange
from rainbow.colorings.exceptions import SelfLoop
from rainbow.colorings.exceptions import ShapeMismatch
from rainbow.colorings.exceptions import UnknownCertificate
from rainbow.colorings.exceptions import VertexOutOfRange

TRIANGLE = [[0, 1, 2], [1, 0, 3], [2, 3, 0]]


def test_k13_is_balanced_with_t_2(k13):
    profile = balance_profile(k13)
    assert k13.n == 13
    assert k13.ell == 6
    assert profile.uniform_t == 2
    assert profile.unbalanced_vertices() == []
    assert is_balanced(k13)


def test_k13_matrix_round_trips(k13):
    assert to_matrix(k13).tolist() == [list(row) for row in K13_MATRIX]


def test_stored_matrix_is_read_only(k13):
    with pytest.raises(ValueError, match="read-only"):
        k13.matrix[0, 1] = 3


def test_get_certificate_returns_clique_size():
    coloring, q = get_certificate("k13")
    assert q == 4
    assert coloring.n == 13


def test_get_certificate_unknown_name():
    with pytest.raises(UnknownCertificate, match="k13"):
        get_certificate("k17")


@pytest.mark.parametrize(
    ("n", "entries", "error"),
    [
        (3, [[0, 1], [1, 0]], ShapeMismatch),
        (3, [[0, 1, 2], [1, 0], [2, 3, 0]], ShapeMismatch),
        (3, [[1, 1, 2], [1, 0, 3], [2, 3, 0]], BadDiagonal),
        (3, [[0, 4, 2], [4, 0, 3], [2, 3, 0]], ColorOutOfRange),
        (3, [[0, 0, 2], [0, 0, 3], [2, 3, 0]], ColorOutOfRange),
        (3, [[0, 1, 2], [2, 0, 3], [2, 3, 0]], AsymmetricMatrix),
        (0, [], ShapeMismatch),
    ],
)
def test_new_coloring_rejects_invalid_matrices(n, entries, error):
    with pytest.raises(error):
        new_coloring(n, 3, entries)


def test_new_coloring_reports_first_violation():
    # Both the diagonal and the symmetry are wrong; the diagonal is checked first.
    with pytest.raises(BadDiagonal):
        new_coloring(3, 3, [[0, 1, 2], [2, 5, 3], [2, 3, 0]])


@pytest.mark.parametrize(
    ("u", "v", "expected"),
    [(1, 5, 1), (9, 11, 6), (12, 13, 4), (13, 12, 4), (1, 2, 2)],
)
def test_k13_entries(k13, u, v, expected):
    assert color_of(k13, u, v) == expected


def test_k13_rows_cover_every_other_vertex(k13):
    rows = (to_matrix(k13) > 0).sum(axis=1)
    assert rows.tolist() == [12] * 13


def test_monochromatic_triangle_is_balanced():
    profile = balance_profile(new_coloring(3, 1, [[0, 1, 1], [1, 0, 1], [1, 1, 0]]))
    assert profile.uniform_t == 2


def test_color_of_is_symmetric(k13):
    for u, v, c in k13.edges():
        assert color_of(k13, u, v) == color_of(k13, v, u) == c


@pytest.mark.parametrize(
    ("u", "v", "error"),
    [(1, 1, SelfLoop), (0, 2, VertexOutOfRange), (1, 14, VertexOutOfRange)],
)
def test_color_of_rejects_bad_pairs(k13, u, v, error):
    with pytest.raises(error):
        k13.color(u, v)


def test_recolor_breaks_balance_at_both_endpoints(k13):
    assert k13.color(1, 2) == 2
    changed = recolor(k13, 1, 2, 1)
    profile = balance_profile(changed)
    assert changed.color(2, 1) == 1
    assert profile.uniform_t is None
    assert profile.unbalanced_vertices() == [1, 2]
    assert profile.count(1, 1) == 3
    assert profile.count(1, 2) == 1
    # The original is untouched.
    assert k13.color(1, 2) == 2


def test_recolor_rejects_unknown_color(k13):
    with pytest.raises(ColorOutOfRange):
        recolor(k13, 1, 2, 7)


def test_balance_profile_without_divisibility():
    # n - 1 = 2 is not divisible by 3 colors, so uniform_t stays unset.
    profile = balance_profile(new_coloring(3, 3, TRIANGLE))
    assert profile.uniform_t is None
    assert profile.counts.sum() == 6


def test_color_classes_partition_the_edges(k13):
    classes = color_classes(k13)
    assert sorted(classes) == [1, 2, 3, 4, 5, 6]
    assert all(len(edges) == 13 for edges in classes.values())
    assert sum(len(edges) for edges in classes.values()) == k13.edge_count


def test_colorings_compare_by_content(k13):
    same = new_coloring(13, 6, np.array(K13_MATRIX))
    assert same == k13
    assert hash(same) == hash(k13)
    assert recolor(k13, 1, 2, 1) != k13


def test_to_networkx_carries_colors(k13):
    graph = to_networkx(k13)
    assert graph.number_of_nodes() == 13
    assert graph.number_of_edges() == 78
    assert graph.edges[1, 2]["color"] == 2
