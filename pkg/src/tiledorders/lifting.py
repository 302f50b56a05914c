"""Liftable quiver automorphisms and the monomial-lift group of a tiled order.

A vertex permutation sigma of the link graph lifts to an automorphism of the
order exactly when the integer difference system

    x[i] - x[j] = alpha[i][j] - alpha[sigma(i)][sigma(j)]   (all ordered i != j)

is consistent.  Because the constraint graph is complete, solutions form a
coset of the constant vectors, so every consistent system has a unique
representative with min(x) = 0; that representative is the exponent vector of
the monomial matrix with entry pi^x[i] at (i, sigma(i)) whose conjugation
action realizes sigma.  The solver derives the candidate from row 1 and then
checks every ordered pair, and all of its verdicts are cross-validated
against the conjugation oracle :func:`tiledorders.exponent.conjugate`.

The liftable permutations form a finite group under

    (sigma, x) * (tau, y) = (sigma tau, x + y o sigma)

(exponents added after relabelling y by sigma, then renormalized).  The same
solver generalizes to a pair of orders, which yields the conjugacy test
:func:`orders_isomorphic`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DimensionMismatch, NotQuiverAutomorphism, TooLarge
from .exponent import (
    ExponentMatrix,
    Rows,
    conjugate,
    is_basic,
    is_zero_one,
)
from .perm import DEFAULT_MAX_N, Perm, is_automorphism, quiver_automorphisms
from .quiver import Quiver, ValuedQuiver, link_graph, valued_quiver

#: Shape of the full automorphism group: inner automorphisms extended by the
#: finite monomial-lift group computed here.  The inner factor is infinite
#: and is only ever reported through this statement, never enumerated.
SEMIDIRECT_STRUCTURE = "Aut_R = Inn ⋊ O_Lambda"

RawLift = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class LiftVector:
    """Diagonal exponent vector, normalized so that min(x) = 0.

    Adding a constant to every entry gives the same conjugation action, so
    the normalized representative is canonical and keeps every exponent in
    the lift matrix non-negative.
    """

    x: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.x:
            raise ValueError("lift vector must be non-empty")
        if min(self.x) != 0:
            raise ValueError(f"lift vector must be normalized to min 0: {self.x}")

    @staticmethod
    def from_raw(values) -> "LiftVector":
        """Shift an arbitrary integer vector into the normalized coset representative."""
        vals = tuple(values)
        if not vals:
            raise ValueError("lift vector must be non-empty")
        shift = min(vals)
        return LiftVector(tuple(v - shift for v in vals))

    @property
    def n(self) -> int:
        return len(self.x)


@dataclass(frozen=True)
class MonomialLift:
    """Pair (sigma, x) encoding the monomial matrix with pi^x[i] at (i, sigma(i))."""

    sigma: Perm
    x: LiftVector

    def __post_init__(self) -> None:
        if self.sigma.n != self.x.n:
            raise DimensionMismatch(
                f"permutation size {self.sigma.n} vs vector length {self.x.n}"
            )

    @property
    def n(self) -> int:
        return self.sigma.n

    @staticmethod
    def identity(n: int) -> "MonomialLift":
        return MonomialLift(Perm.identity(n), LiftVector((0,) * n))

    @staticmethod
    def for_order(a: ExponentMatrix, sigma: Perm, x) -> "MonomialLift":
        """Construct a lift and verify against the conjugation oracle that it
        actually is an automorphism of ``a``."""
        lift = MonomialLift(sigma, LiftVector.from_raw(x))
        if not lift.verify(a):
            raise ValueError(
                f"conjugation by ({sigma.cycle_string()}, {lift.x.x}) does not fix the order"
            )
        return lift

    def verify(self, a: ExponentMatrix) -> bool:
        """Check conjugate(a, sigma, x) == a."""
        return conjugate(a, self.sigma, self.x.x).beta == a.alpha

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.sigma.image, self.x.x)


# -- difference-system solver ------------------------------------------------
#
# The same spanning-assignment solver serves both liftability (b == a) and
# the two-order conjugacy search (general b): set x[1] = 0, read x[j] off the
# (1, j) constraint, then verify every ordered pair.

def _spanning_assignment(a: Rows, b: Rows, sigma: Perm) -> list[int]:
    n = len(a)
    img = sigma.image
    s1 = img[0]
    return [b[s1 - 1][img[j] - 1] - a[0][j] for j in range(n)]


def _first_bad_pair(
    a: Rows, b: Rows, sigma: Perm, x: list[int]
) -> tuple[int, int] | None:
    n = len(a)
    img = sigma.image
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if x[i] - x[j] != a[i][j] - b[img[i] - 1][img[j] - 1]:
                return (i + 1, j + 1)
    return None


def _solve_difference_system(
    a: Rows, b: Rows, sigma: Perm
) -> tuple[LiftVector | None, tuple[int, int] | None]:
    x = _spanning_assignment(a, b, sigma)
    bad = _first_bad_pair(a, b, sigma, x)
    if bad is not None:
        return None, bad
    return LiftVector.from_raw(x), None


def solve_lift_system(a: ExponentMatrix, sigma: Perm) -> LiftVector | None:
    """Normalized solution of the lift system for sigma, or None if inconsistent."""
    if sigma.n != a.n:
        raise DimensionMismatch(f"sizes differ: {a.n} vs {sigma.n}")
    solution, _ = _solve_difference_system(a.alpha, a.alpha, sigma)
    return solution


def first_inconsistent_pair(a: ExponentMatrix, sigma: Perm) -> tuple[int, int] | None:
    """First ordered pair (i, j), scanned row-major, whose constraint fails."""
    if sigma.n != a.n:
        raise DimensionMismatch(f"sizes differ: {a.n} vs {sigma.n}")
    x = _spanning_assignment(a.alpha, a.alpha, sigma)
    return _first_bad_pair(a.alpha, a.alpha, sigma, x)


def is_liftable(a: ExponentMatrix, sigma: Perm) -> bool:
    """True iff the lift system is consistent and sigma preserves the link graph.

    A consistent system already forces sigma onto the quiver (conjugation by
    the resulting monomial matrix fixes the order, hence permutes the arrow
    criteria covariantly), so the membership check is a safety assertion and
    the two verdicts must never disagree.
    """
    x = solve_lift_system(a, sigma)
    member = is_automorphism(link_graph(a), sigma)
    if x is not None and not member:
        raise RuntimeError(
            f"solvable lift system for non-automorphism {sigma.cycle_string()}"
        )
    return x is not None and member


def lift_matrix(lift: MonomialLift, symbol: str = "pi") -> list[list[str]]:
    """Symbolic monomial matrix: pi^x[i] at (i, sigma(i)), "0" elsewhere."""
    n = lift.n
    rows = [["0"] * n for _ in range(n)]
    for i in range(n):
        e = lift.x.x[i]
        if e == 0:
            token = "1"
        elif e == 1:
            token = symbol
        else:
            token = f"{symbol}^{e}"
        rows[i][lift.sigma.image[i] - 1] = token
    return rows


# -- raw composition (plain tuples, used by the group machinery) -------------

def _raw_compose(e1: RawLift, e2: RawLift) -> RawLift:
    img1, x1 = e1
    img2, x2 = e2
    img = tuple(img2[v - 1] for v in img1)
    z = tuple(x1[i] + x2[img1[i] - 1] for i in range(len(img1)))
    shift = min(z)
    return img, tuple(v - shift for v in z)


def _raw_invert(e: RawLift) -> RawLift:
    img, x = e
    n = len(img)
    inv = [0] * n
    y = [0] * n
    for i in range(n):
        inv[img[i] - 1] = i + 1
        y[img[i] - 1] = -x[i]
    shift = min(y)
    return tuple(inv), tuple(v - shift for v in y)


def compose_lifts(l1: MonomialLift, l2: MonomialLift) -> MonomialLift:
    """Product lift: permutations compose left-to-right, exponents add after
    relabelling the second vector by the first permutation, then renormalize."""
    if l1.n != l2.n:
        raise DimensionMismatch(f"sizes differ: {l1.n} vs {l2.n}")
    img, x = _raw_compose((l1.sigma.image, l1.x.x), (l2.sigma.image, l2.x.x))
    return MonomialLift(Perm(img), LiftVector(x))


def invert_lift(lift: MonomialLift) -> MonomialLift:
    """Inverse lift: compose_lifts(lift, invert_lift(lift)) is the identity lift."""
    img, x = _raw_invert((lift.sigma.image, lift.x.x))
    return MonomialLift(Perm(img), LiftVector(x))


@dataclass(frozen=True)
class LiftableGroup:
    """The finite group of monomial lifts of an order, fully enumerated.

    ``elements`` is closed under composition and inversion and contains the
    identity lift (verified at construction); the permutation parts form a
    subgroup of the link-graph automorphism group, whose size ``aut_q_order``
    records for comparison.
    """

    order_matrix: ExponentMatrix
    elements: tuple[MonomialLift, ...]
    generators: tuple[MonomialLift, ...]
    is_cyclic: bool
    is_abelian: bool
    aut_q_order: int

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def all_liftable(self) -> bool:
        return len(self.elements) == self.aut_q_order


def _raw_closure(gens: list[RawLift], identity: RawLift) -> set[RawLift]:
    elems = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for g in frontier:
            for h in gens:
                p = _raw_compose(g, h)
                if p not in elems:
                    elems.add(p)
                    new.append(p)
        frontier = new
    return elems


def _greedy_generators(raw: list[RawLift], identity: RawLift) -> list[RawLift]:
    # Largest-extension-first, ties broken by image-lex order (raw is sorted).
    # Minimality of the set is best-effort; determinism is guaranteed.
    target = len(raw)
    gens: list[RawLift] = []
    generated = {identity}
    while len(generated) < target:
        best = None
        best_size = len(generated)
        for e in raw:
            if e in generated:
                continue
            size = len(_raw_closure(gens + [e], identity))
            if size > best_size:
                best, best_size = e, size
                if best_size == target:
                    break
        if best is None:  # cannot happen: any new element strictly extends
            raise RuntimeError("generator search stalled")
        gens.append(best)
        generated = _raw_closure(gens, identity)
    return gens


def _element_order(e: RawLift, identity: RawLift) -> int:
    k = 1
    p = e
    while p != identity:
        p = _raw_compose(p, e)
        k += 1
    return k


def _assemble_group(a: ExponentMatrix, auts: list[Perm]) -> LiftableGroup:
    n = a.n
    raw: list[RawLift] = []
    for sigma in auts:
        x = solve_lift_system(a, sigma)
        if x is not None:
            raw.append((sigma.image, x.x))
    raw.sort()
    identity: RawLift = (tuple(range(1, n + 1)), (0,) * n)
    members = set(raw)
    by_image = {img: x for img, x in raw}

    if identity not in members:
        raise RuntimeError("identity lift missing")
    # Closure, and agreement of every product with the solver's lift for the
    # product permutation (they coincide because normalized solutions are
    # unique per permutation).
    for e1 in raw:
        for e2 in raw:
            img, x = _raw_compose(e1, e2)
            if by_image.get(img) != x:
                raise RuntimeError(f"lift group not closed at {e1} * {e2}")
        if _raw_invert(e1) not in members:
            raise RuntimeError(f"missing inverse for {e1}")
    if len(auts) % len(raw) != 0 or len(raw) > len(auts):
        raise RuntimeError("lift group size does not divide |Aut(Q)|")

    gens = _greedy_generators(raw, identity)
    is_cyclic = any(_element_order(e, identity) == len(raw) for e in raw)
    is_abelian = all(
        _raw_compose(g, h) == _raw_compose(h, g) for g in gens for h in gens
    )

    def wrap(e: RawLift) -> MonomialLift:
        return MonomialLift(Perm(e[0]), LiftVector(e[1]))

    generators = tuple(wrap(e) for e in gens)
    for g in generators:
        if not g.verify(a):
            raise RuntimeError(f"generator {g} failed the conjugation oracle")
    return LiftableGroup(
        order_matrix=a,
        elements=tuple(wrap(e) for e in raw),
        generators=generators,
        is_cyclic=is_cyclic,
        is_abelian=is_abelian,
        aut_q_order=len(auts),
    )


def liftable_subgroup(
    a: ExponentMatrix, max_n: int = DEFAULT_MAX_N, workers: int = 1
) -> LiftableGroup:
    """Enumerate the link-graph automorphisms, keep the liftable ones with
    their normalized lifts, and assemble the verified group."""
    auts = quiver_automorphisms(link_graph(a), max_n=max_n, workers=workers)
    return _assemble_group(a, auts)


def preserves_valuation(a: ExponentMatrix, sigma: Perm) -> bool:
    """True iff sigma also preserves the arrow values of the valued quiver.

    Strictly stronger than liftability: a liftable sigma may permute arrows
    of different value.  Raises NotQuiverAutomorphism when sigma is not an
    automorphism of the link graph.
    """
    q = link_graph(a)
    if not is_automorphism(q, sigma):
        raise NotQuiverAutomorphism(sigma.cycle_string())
    img = sigma.image
    return all(
        a.alpha[img[i - 1] - 1][img[j - 1] - 1] == a.alpha[i - 1][j - 1]
        for i, j in q.arrows
    )


def orders_isomorphic(
    a: ExponentMatrix, b: ExponentMatrix, max_n: int = DEFAULT_MAX_N
) -> tuple[Perm, LiftVector] | None:
    """Search for (sigma, x) with conjugate(a, sigma, x) == b.

    Permutations are scanned in image-lex order and the first witness is
    returned, so (a, a) always yields the identity.  Every witness is
    re-checked against the conjugation oracle before being returned.
    """
    if a.n != b.n:
        raise DimensionMismatch(f"sizes differ: {a.n} vs {b.n}")
    if a.n > max_n:
        raise TooLarge(a.n, max_n)
    for img in itertools.permutations(range(1, a.n + 1)):
        sigma = Perm(img)
        solution, _ = _solve_difference_system(a.alpha, b.alpha, sigma)
        if solution is None:
            continue
        if conjugate(a, sigma, solution.x).beta != b.alpha:
            raise RuntimeError("solver witness failed the conjugation oracle")
        return sigma, solution
    return None


@dataclass(frozen=True)
class StructureReport:
    """Everything the report surface exposes about one order."""

    n: int
    valid: bool
    basic: bool
    zero_one: bool
    quiver: Quiver
    valued: ValuedQuiver
    aut_q_order: int
    group: LiftableGroup
    all_liftable: bool
    structure: str


def aut_structure_report(
    a: ExponentMatrix, max_n: int = DEFAULT_MAX_N, workers: int = 1
) -> StructureReport:
    """Aggregate flags, quiver, automorphism count and lift group for an order.

    For a basic order with all exponents in {0, 1} every link-graph
    automorphism is liftable; that is asserted here rather than reported as
    data, since a violation would mean a bug in the solver or the quiver.
    """
    vq = valued_quiver(a)
    auts = quiver_automorphisms(vq.quiver, max_n=max_n, workers=workers)
    group = _assemble_group(a, auts)
    basic = is_basic(a)
    zero_one = is_zero_one(a)
    all_liftable = group.all_liftable
    if basic and zero_one and not all_liftable:
        raise RuntimeError("basic (0,1)-order with a non-liftable automorphism")
    return StructureReport(
        n=a.n,
        valid=True,
        basic=basic,
        zero_one=zero_one,
        quiver=vq.quiver,
        valued=vq,
        aut_q_order=len(auts),
        group=group,
        all_liftable=all_liftable,
        structure=SEMIDIRECT_STRUCTURE,
    )
