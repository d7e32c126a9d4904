"""Affine Cartan data for the doubly-forked (type D affine) diagram.

Weights live in the fundamental-weight basis as (n+1)-tuples indexed by the
nodes 0..n.  Classical weights are lifted to level zero by solving for the
0th coefficient, so weight arithmetic stays purely additive and the pairing
with a simple coroot h_i is just the i-th coefficient.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def cartan_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix on nodes 0..n.

    Nodes 0 and 1 both attach to node 2, nodes n-1 and n both attach to
    node n-2, and 2..n-2 form a path.  Needs n >= 4 so the two forks do
    not collide.
    """
    assert n >= 4
    a = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        a[i][i] = 2
    edges = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)] + [(n - 2, n)]
    for i, j in edges:
        a[i][j] = -1
        a[j][i] = -1
    return tuple(tuple(row) for row in a)


@lru_cache(maxsize=None)
def dual_kac_labels(n: int) -> tuple[int, ...]:
    labels = [1] * (n + 1)
    for i in range(2, n - 1):
        labels[i] = 2
    return tuple(labels)


def level(wt: tuple[int, ...], n: int | None = None) -> int:
    if n is None:
        n = len(wt) - 1
    return sum(l * c for l, c in zip(dual_kac_labels(n), wt))


def lift(classical: tuple[int, ...], n: int | None = None) -> tuple[int, ...]:
    """Extend a classical weight (c_1..c_n) to the level-zero affine weight."""
    if n is None:
        n = len(classical)
    assert len(classical) == n
    labels = dual_kac_labels(n)
    c0 = -sum(l * c for l, c in zip(labels[1:], classical))
    return (c0,) + tuple(classical)


@lru_cache(maxsize=None)
def alpha(i: int, n: int) -> tuple[int, ...]:
    """Simple root alpha_i in the fundamental-weight basis (level zero)."""
    return cartan_matrix(n)[i]


def add(w1, w2):
    return tuple(a + b for a, b in zip(w1, w2))


def sub(w1, w2):
    return tuple(a - b for a, b in zip(w1, w2))


def zero(n: int) -> tuple[int, ...]:
    return (0,) * (n + 1)
