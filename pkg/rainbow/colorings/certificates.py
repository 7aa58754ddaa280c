"""Embedded certificate colorings."""

from collections.abc import Callable
from functools import cache

from rainbow.colorings.coloring import EdgeColoring
from rainbow.colorings.coloring import new_coloring
from rainbow.colorings.exceptions import UnknownCertificate

# Balanced 6-coloring of K_13, every vertex sees every color twice, no rainbow K_4.
K13_MATRIX: tuple[tuple[int, ...], ...] = (
    (0, 2, 5, 4, 1, 3, 3, 6, 4, 2, 6, 5, 1),
    (2, 0, 3, 6, 5, 6, 4, 1, 3, 1, 4, 5, 2),
    (5, 3, 0, 5, 4, 2, 6, 3, 1, 6, 2, 1, 4),
    (4, 6, 5, 0, 2, 4, 5, 2, 1, 3, 3, 1, 6),
    (1, 5, 4, 2, 0, 3, 1, 6, 2, 5, 4, 6, 3),
    (3, 6, 2, 4, 3, 0, 1, 4, 5, 6, 5, 2, 1),
    (3, 4, 6, 5, 1, 1, 0, 2, 5, 4, 2, 6, 3),
    (6, 1, 3, 2, 6, 4, 2, 0, 3, 5, 1, 4, 5),
    (4, 3, 1, 1, 2, 5, 5, 3, 0, 4, 6, 2, 6),
    (2, 1, 6, 3, 5, 6, 4, 5, 4, 0, 1, 3, 2),
    (6, 4, 2, 3, 4, 5, 2, 1, 6, 1, 0, 3, 5),
    (5, 5, 1, 1, 6, 2, 6, 4, 2, 3, 3, 0, 4),
    (1, 2, 4, 6, 3, 1, 3, 5, 6, 2, 5, 4, 0),
)
K13_COLORS = 6
K13_CLIQUE = 4


@cache
def k13_certificate() -> EdgeColoring:
    return new_coloring(len(K13_MATRIX), K13_COLORS, K13_MATRIX)


# name -> (factory, clique size the certificate is rainbow-free for)
CERTIFICATES: dict[str, tuple[Callable[[], EdgeColoring], int]] = {
    "k13": (k13_certificate, K13_CLIQUE),
}


def get_certificate(name: str) -> tuple[EdgeColoring, int]:
    try:
        factory, q = CERTIFICATES[name]
    except KeyError:
        known = ", ".join(sorted(CERTIFICATES))
        msg = f"unknown certificate {name!r}; known: {known}"
        raise UnknownCertificate(msg) from None
    return factory(), q
