"""Permutations of {1..n} and brute-force quiver automorphism enumeration.

Composition is left-to-right throughout the package: ``compose(s, t)`` applies
``s`` first, so (s*t)(i) = t(s(i)).  This is the convention forced by the
permutation-matrix identity v(s)v(t) = v(s*t) for matrices with entry 1 at
(i, s(i)), and every consumer of permutations here relies on it.
"""

from __future__ import annotations

import itertools
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .errors import (
    DimensionMismatch,
    MalformedSyntax,
    OutOfRange,
    RepeatedElement,
    TooLarge,
)

if TYPE_CHECKING:
    from .quiver import Quiver

DEFAULT_MAX_N = 9


@dataclass(frozen=True, order=True)
class Perm:
    """Bijection of {1..n}; ``image[i-1]`` is the image of i (1-based values).

    Instances sort lexicographically by their image tuple, which is the
    canonical order used for all deterministic output.
    """

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        for v in self.image:
            if not 1 <= v <= n:
                raise OutOfRange(f"image value {v} outside 1..{n}")
        if len(set(self.image)) != n:
            raise RepeatedElement("image is not a bijection")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(tuple(range(1, n + 1)))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.image))

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, v in enumerate(self.image):
            inv[v - 1] = i + 1
        return Perm(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each starting at its minimum."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in cycles)

    def one_line(self) -> str:
        return "[" + ",".join(str(v) for v in self.image) + "]"


def compose(s: Perm, t: Perm) -> Perm:
    """Left-to-right composition: apply s first, then t."""
    if s.n != t.n:
        raise DimensionMismatch(f"sizes differ: {s.n} vs {t.n}")
    return Perm(tuple(t.image[v - 1] for v in s.image))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, n: int) -> Perm:
    """Parse cycle notation "(1 2 3)(4 5)" or a one-line image "[2,3,1]".

    Values are 1-based; fixed points may be omitted in cycle notation.
    Raises MalformedSyntax, OutOfRange or RepeatedElement.
    """
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise MalformedSyntax(f"unterminated one-line image: {text!r}")
        parts = [p.strip() for p in s[1:-1].split(",")]
        if parts == [""]:
            raise MalformedSyntax("empty one-line image")
        try:
            image = tuple(int(p) for p in parts)
        except ValueError:
            raise MalformedSyntax(f"non-integer entry in {text!r}") from None
        if len(image) != n:
            raise MalformedSyntax(f"expected {n} entries, got {len(image)}")
        return Perm(image)
    if s.startswith("("):
        body = _CYCLE_RE.sub("", s)
        if body.strip():
            raise MalformedSyntax(f"stray text outside cycles: {text!r}")
        image = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle_text in _CYCLE_RE.findall(s):
            parts = [p for p in re.split(r"[,\s]+", cycle_text.strip()) if p]
            if not parts:  # "()" denotes the identity
                continue
            try:
                points = [int(p) for p in parts]
            except ValueError:
                raise MalformedSyntax(f"non-integer entry in {text!r}") from None
            for p in points:
                if not 1 <= p <= n:
                    raise OutOfRange(f"point {p} outside 1..{n}")
                if p in seen:
                    raise RepeatedElement(f"point {p} repeated")
                seen.add(p)
            for a, b in zip(points, points[1:] + points[:1]):
                image[a - 1] = b
        return Perm(tuple(image))
    raise MalformedSyntax(f"expected cycles or one-line image, got {text!r}")


def is_automorphism(q: "Quiver", s: Perm) -> bool:
    """True iff (i, j) is an arrow exactly when (s(i), s(j)) is."""
    if s.n != q.n:
        return False
    arrows = q.arrows
    img = s.image
    for i in range(1, q.n + 1):
        for j in range(1, q.n + 1):
            if ((i, j) in arrows) != ((img[i - 1], img[j - 1]) in arrows):
                return False
    return True


def quiver_automorphisms(
    q: "Quiver", max_n: int = DEFAULT_MAX_N, workers: int = 1
) -> list[Perm]:
    """All arrow-preserving permutations of the vertices, in image-lex order.

    Backtracking over partial vertex assignments, pruned by the degree
    profile (out-degree, in-degree, loop flag) of each vertex.  The search
    may be partitioned over the image of vertex 1 and run on ``workers``
    threads; results are merged and sorted, so output does not depend on
    scheduling.  Guarded by ``max_n`` against factorial blowup.
    """
    n = q.n
    if n > max_n:
        raise TooLarge(n, max_n)
    arrows = q.arrows
    verts = range(1, n + 1)
    out_deg = {v: sum(1 for w in verts if w != v and (v, w) in arrows) for v in verts}
    in_deg = {v: sum(1 for w in verts if w != v and (w, v) in arrows) for v in verts}
    loop = {v: (v, v) in arrows for v in verts}
    profile = {v: (out_deg[v], in_deg[v], loop[v]) for v in verts}
    candidates = {
        v: [w for w in verts if profile[w] == profile[v]] for v in verts
    }

    def extend(vertex: int, assigned: dict[int, int], used: set[int],
               acc: list[tuple[int, ...]]) -> None:
        if vertex > n:
            acc.append(tuple(assigned[v] for v in verts))
            return
        for w in candidates[vertex]:
            if w in used:
                continue
            ok = True
            for u, wu in assigned.items():
                if ((vertex, u) in arrows) != ((w, wu) in arrows):
                    ok = False
                    break
                if ((u, vertex) in arrows) != ((wu, w) in arrows):
                    ok = False
                    break
            if ok:
                assigned[vertex] = w
                used.add(w)
                extend(vertex + 1, assigned, used, acc)
                del assigned[vertex]
                used.discard(w)

    def branch(first: int) -> list[tuple[int, ...]]:
        acc: list[tuple[int, ...]] = []
        extend(2, {1: first}, {first}, acc)
        return acc

    firsts = candidates[1]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks: Iterable[list[tuple[int, ...]]] = pool.map(branch, firsts)
            images = [img for chunk in chunks for img in chunk]
    else:
        images = [img for f in firsts for img in branch(f)]
    return [Perm(img) for img in sorted(images)]


def quiver_automorphisms_naive(q: "Quiver", max_n: int = DEFAULT_MAX_N) -> list[Perm]:
    """Filter all of S_n for arrow preservation; oracle for the backtracker."""
    if q.n > max_n:
        raise TooLarge(q.n, max_n)
    out = []
    for img in itertools.permutations(range(1, q.n + 1)):
        s = Perm(img)
        if is_automorphism(q, s):
            out.append(s)
    return out
