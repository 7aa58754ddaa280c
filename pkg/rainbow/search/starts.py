"""Starting colorings for local search restarts.

When a decomposition of K_n into regular factors is at hand, grouping the
factors t at a time per color gives an exactly balanced start:

- n even: the round-robin 1-factorization (n - 1 perfect matchings).
- n odd and t even: Walecki's decomposition into (n - 1) / 2 Hamiltonian
  cycles, t / 2 cycles per color.

Otherwise every edge gets a uniform random color. Factor order and vertex
labels are shuffled from the restart's stream. These colorings are only
seeds for the search and are never reported as certificates.
"""

from __future__ import annotations

import numpy as np

Edge = tuple[int, int]


def round_robin_factors(n: int) -> list[list[Edge]]:
    """n - 1 perfect matchings partitioning the edges of K_n (n even, 0-based)."""
    if n % 2:
        msg = f"round-robin needs an even vertex count, got {n}"
        raise ValueError(msg)
    fixed = n - 1
    factors = []
    for r in range(n - 1):
        matching = [(r, fixed)]
        for k in range(1, n // 2):
            matching.append(((r + k) % fixed, (r - k) % fixed))
        factors.append(matching)
    return factors


def walecki_cycles(n: int) -> list[list[Edge]]:
    """(n - 1) / 2 Hamiltonian cycles partitioning the edges of K_n (n odd, 0-based)."""
    if n % 2 == 0 or n < 3:  # noqa: PLR2004
        msg = f"Walecki's construction needs an odd vertex count >= 3, got {n}"
        raise ValueError(msg)
    m = (n - 1) // 2
    hub = n - 1
    cycles = []
    for i in range(m):
        path = [i]
        for j in range(1, m):
            path.extend([(i + j) % (2 * m), (i - j) % (2 * m)])
        path.append((i + m) % (2 * m))
        cycle = list(zip(path, path[1:], strict=False))
        cycle.extend([(hub, path[0]), (hub, path[-1])])
        cycles.append(cycle)
    return cycles


def _factor_groups(n: int, ell: int) -> list[list[Edge]] | None:
    t = (n - 1) // ell
    if n % 2 == 0:
        return round_robin_factors(n)
    if t % 2 == 0 and n >= 3:  # noqa: PLR2004
        return walecki_cycles(n)
    return None


def uniform_start(n: int, ell: int, rng: np.random.Generator) -> np.ndarray:
    """Symmetric matrix with an independent uniform color 1..ell on every edge."""
    matrix = np.zeros((n, n), dtype=np.int64)
    rows, cols = np.triu_indices(n, k=1)
    colors = rng.integers(1, ell + 1, size=rows.size)
    matrix[rows, cols] = colors
    matrix[cols, rows] = colors
    return matrix


def balanced_start(n: int, ell: int, rng: np.random.Generator) -> np.ndarray:
    """Random start, exactly balanced whenever a factor decomposition applies."""
    factors = _factor_groups(n, ell) if (n - 1) % ell == 0 else None
    if factors is None:
        return uniform_start(n, ell, rng)

    per_color = len(factors) // ell
    order = rng.permutation(len(factors))
    labels = rng.permutation(n)
    matrix = np.zeros((n, n), dtype=np.int64)
    for slot, index in enumerate(order.tolist()):
        color = slot // per_color + 1
        for a, b in factors[index]:
            u, v = labels[a], labels[b]
            matrix[u, v] = matrix[v, u] = color
    return matrix
