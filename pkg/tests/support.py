"""Random generators and small oracles shared by the test modules.

Validity of generated orders comes from closure operations rather than
rejection: the min-plus transitive closure of any non-negative zero-diagonal
matrix satisfies the triangle inequality, and for (0,1) matrices the
inequality holds exactly when the zero pattern is a transitive relation.
Basicness (no duplicate columns) is obtained by retrying, since the
randomized quiver-equivalence suites are only meaningful on basic orders.
"""

from __future__ import annotations

import random

from tiledorders import ExponentMatrix, Quiver, is_basic, validate


def minplus_closure(rows: list[list[int]]) -> list[list[int]]:
    """Floyd-Warshall closure; with non-negative entries the diagonal stays 0."""
    n = len(rows)
    out = [list(r) for r in rows]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                c = out[i][k] + out[k][j]
                if c < out[i][j]:
                    out[i][j] = c
    return out


def random_valid_order(rng: random.Random, n: int, max_entry: int = 4) -> ExponentMatrix:
    rows = [
        [0 if i == j else rng.randint(0, max_entry) for j in range(n)]
        for i in range(n)
    ]
    return validate(minplus_closure(rows))


def random_basic_valid_order(rng: random.Random, n: int, max_entry: int = 4) -> ExponentMatrix:
    while True:
        a = random_valid_order(rng, n, max_entry)
        if is_basic(a):
            return a


def random_basic_zero_one_order(rng: random.Random, n: int) -> ExponentMatrix:
    """Basic order with entries in {0, 1}.

    The zero pattern of a valid (0,1)-order is a reflexive transitive
    relation, so draw a random relation, close it transitively, and retry
    until no off-diagonal pair is symmetric (which is exactly basicness).
    """
    while True:
        p = rng.choice((0.15, 0.3, 0.45))
        zero = [[i == j or rng.random() < p for j in range(n)] for i in range(n)]
        for k in range(n):
            for i in range(n):
                if zero[i][k]:
                    for j in range(n):
                        if zero[k][j]:
                            zero[i][j] = True
        a = validate([[0 if zero[i][j] else 1 for j in range(n)] for i in range(n)])
        if is_basic(a):
            return a


def random_lattice_rows(rng: random.Random, n: int, lo: int = -3, hi: int = 5) -> list[list[int]]:
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def random_quiver(rng: random.Random, n: int, p: float = 0.3) -> Quiver:
    arrows = {
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if rng.random() < p
    }
    return Quiver(n, frozenset(arrows))
