"""The polytopes P_{r1,r2}(c) = delta(O, r1) + delta_bar(O, r2) + c.

Membership is one ``deg+`` evaluation:

    x in P_{r1,r2}(c)  iff  deg+(x - c - (r2 - r1) * 1) <= (n+1) * r1

(a point ``x - c = y + z`` with ``min y >= -r1`` and ``max z <= r2`` exists
iff ``sum_i max(-r1, x_i - c_i - r2) <= 0``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import List, Sequence, Tuple

from bnrank.geometry.simplex import Point, as_point, simplex_vertices
from bnrank.ilp import degplus


@dataclass(frozen=True)
class PolytopeMN:
    r1: Fraction
    r2: Fraction
    center: Point

    def __post_init__(self) -> None:
        object.__setattr__(self, "r1", Fraction(self.r1))
        object.__setattr__(self, "r2", Fraction(self.r2))
        object.__setattr__(self, "center", as_point(self.center))
        if self.r1 < 0 or self.r2 < 0:
            raise ValueError("radii must be nonnegative")

    @property
    def size(self) -> int:
        return len(self.center)

    def excess(self, x: Sequence) -> Fraction:
        """``deg+(x - c - (r2 - r1) * 1)``, compared against ``(n+1) r1``."""
        shift = self.r2 - self.r1
        return degplus([Fraction(a) - b - shift for a, b in zip(x, self.center)])


@dataclass(frozen=True)
class Halfspace:
    """``coefficients . x <= offset`` holds on the whole polytope."""

    coefficients: Tuple[Fraction, ...]
    offset: Fraction

    def holds(self, x: Sequence) -> bool:
        return sum(a * Fraction(b) for a, b in zip(self.coefficients, x)) <= self.offset

    def strictly_holds(self, x: Sequence) -> bool:
        return sum(a * Fraction(b) for a, b in zip(self.coefficients, x)) < self.offset


def polytope_contains(poly: PolytopeMN, x: Sequence) -> bool:
    return poly.excess(x) <= poly.size * poly.r1


def polytope_separate(poly: PolytopeMN, x: Sequence) -> Halfspace | None:
    """``None`` if ``x`` is inside, else a halfspace holding on the polytope but not at ``x``.

    With ``S`` the indices where ``x - c - (r2 - r1)`` is positive, every
    polytope point satisfies ``sum_S (y - c - (r2 - r1)) <= (n+1) r1`` while
    ``x`` attains its full excess there; the offset is the midpoint.
    """
    value = poly.excess(x)
    bound = poly.size * poly.r1
    if value <= bound:
        return None
    shift = poly.r2 - poly.r1
    support = [Fraction(a) - b - shift > 0 for a, b in zip(x, poly.center)]
    coeffs = tuple(Fraction(int(s)) for s in support)
    offset = sum((b + shift for b, s in zip(poly.center, support) if s), Fraction(0)) + (bound + value) / 2
    return Halfspace(coeffs, offset)


def polytope_vertices(r1, r2, size: int) -> Tuple[Point, ...]:
    """``r1 t_i - r2 t_j`` for ``i != j``, the vertices of P_{r1,r2}(O)."""
    r1, r2 = Fraction(r1), Fraction(r2)
    t = simplex_vertices(size)
    return tuple(
        tuple(r1 * a - r2 * b for a, b in zip(t[i], t[j]))
        for i in range(size)
        for j in range(size)
        if i != j
    )


def _null_vector(rows: List[List[Fraction]], width: int) -> List[Fraction] | None:
    """A kernel vector when ``rows`` has rank ``width - 1``, else ``None``."""
    a = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    if r != width - 1:
        return None
    free = next(c for c in range(width) if c not in pivots)
    v = [Fraction(0)] * width
    v[free] = Fraction(1)
    for i, col in enumerate(pivots):
        v[col] = -a[i][free]
    return v


@lru_cache(maxsize=64)
def hull_facets(points: Tuple[Point, ...]) -> Tuple[Tuple[Tuple[Fraction, ...], Fraction], ...]:
    """Facet inequalities ``a . x <= b`` of the hull of full-dimensional H_0 points.

    Points are charted into R^n by dropping the last coordinate; every
    ``n``-subset spanning a hyperplane with all points on one side gives a
    facet.
    """
    chart = [p[:-1] for p in points]
    width = len(chart[0])
    facets = set()
    for subset in combinations(range(len(chart)), width):
        base = chart[subset[0]]
        rows = [[a - b for a, b in zip(chart[i], base)] for i in subset[1:]]
        normal = _null_vector(rows, width)
        if normal is None:
            continue
        level = sum(a * b for a, b in zip(normal, base))
        values = [sum(a * b for a, b in zip(normal, p)) for p in chart]
        if all(v <= level for v in values):
            pass
        elif all(v >= level for v in values):
            normal = [-a for a in normal]
            level = -level
        else:
            continue
        scale = next(abs(a) for a in normal if a != 0)
        facets.add((tuple(a / scale for a in normal), level / scale))
    return tuple(sorted(facets))


def vertex_hull_contains(points: Sequence[Sequence], x: Sequence) -> bool:
    """Exact membership of ``x`` (in H_0) in the convex hull of ``points``."""
    facets = hull_facets(tuple(as_point(p) for p in points))
    y = as_point(x)[:-1]
    return all(sum(a * b for a, b in zip(normal, y)) <= level for normal, level in facets)
