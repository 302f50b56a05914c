"""Link graphs and valued quivers of tiled orders.

The quiver of an order is built here by two independent constructions that
must agree: once from pairwise products and intersections of the maximal
ideals, and once from the diagonal-replacement radical and its min-plus
square.  Keeping both routes alive gives the test suite a cross-check
oracle.  The agreement is exact on basic orders; when two columns of the
order coincide the maximal-ideal recipe stops producing actual ideals and
the two routes diverge at loops (the randomized equivalence suite therefore
draws basic orders, and a unit test pins the divergence).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exponent import ExponentMatrix, intersect, maximal_ideal, minplus_product, radical


@dataclass(frozen=True)
class Quiver:
    """Directed graph on vertices 1..n; loops allowed, no parallel arrows."""

    n: int
    arrows: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for i, j in self.arrows:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"arrow ({i}, {j}) outside 1..{self.n}")

    def has(self, i: int, j: int) -> bool:
        return (i, j) in self.arrows

    def sorted_arrows(self) -> list[tuple[int, int]]:
        return sorted(self.arrows)

    def loop_vertices(self) -> set[int]:
        return {i for i, j in self.arrows if i == j}


@dataclass(frozen=True)
class ValuedQuiver:
    """Quiver with a non-negative integer value on every arrow."""

    quiver: Quiver
    value: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        if set(self.value) != set(self.quiver.arrows):
            raise ValueError("values must be defined on exactly the arrow set")
        for (i, j), v in self.value.items():
            if i == j and v != 0:
                raise ValueError(f"loop at {i} must have value 0, got {v}")


def link_graph(a: ExponentMatrix) -> Quiver:
    """Quiver with an arrow (i, j) whenever M_i * M_j differs from the
    intersection of M_i and M_j.

    The product is taken in (i, j) order: under the lower-triangular
    hereditary convention used by hereditary_order() this orients the
    hereditary link graph as the forward cycle 1 -> 2 -> ... -> n -> 1 and
    keeps the construction in lockstep with link_graph_via_radical.
    """
    n = a.n
    ideals = [maximal_ideal(a, k) for k in range(1, n + 1)]
    arrows = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            product = minplus_product(ideals[i - 1], ideals[j - 1])
            if product != intersect(ideals[i - 1], ideals[j - 1]):
                arrows.add((i, j))
    return Quiver(n, frozenset(arrows))


def link_graph_via_radical(a: ExponentMatrix) -> Quiver:
    """Independent construction: arrow (i, j) iff rad < rad^2 at entry (i, j)."""
    gamma = radical(a)
    square = minplus_product(gamma, gamma)
    arrows = {
        (i + 1, j + 1)
        for i in range(a.n)
        for j in range(a.n)
        if gamma.beta[i][j] < square.beta[i][j]
    }
    return Quiver(a.n, frozenset(arrows))


def valued_quiver(a: ExponentMatrix) -> ValuedQuiver:
    """The link graph with arrow (i, j) valued by the exponent alpha[i][j]."""
    q = link_graph(a)
    return ValuedQuiver(q, {(i, j): a.alpha[i - 1][j - 1] for i, j in q.arrows})
