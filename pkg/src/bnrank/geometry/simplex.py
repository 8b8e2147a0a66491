"""Regular simplices in H_0 and their distance functions.

On H_0 the simplex ``delta`` (vertices ``t_i = (n+1) e_i - 1``) is
``{x : min_i x_i >= -1}``, and its reflection is ``{x : max_i x_i <= 1}``.
Every distance here reduces to a max or min of coordinate differences,
so all results are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from bnrank.ilp import degplus

Point = Tuple[Fraction, ...]

DELTA = "delta"
DELTA_BAR = "delta_bar"


class NotInH0(ValueError):
    pass


def as_point(p: Sequence) -> Point:
    return tuple(Fraction(x) for x in p)


def require_h0(*points: Sequence) -> None:
    for p in points:
        if sum(p) != 0:
            raise NotInH0(f"coordinates of {format_point(p)} sum to {sum(p)}, not 0")


def project_h0(p: Sequence) -> Point:
    shift = Fraction(sum(p), len(p))
    return tuple(Fraction(x) - shift for x in p)


def simplex_vertices(size: int, kind: str = DELTA) -> Tuple[Point, ...]:
    n = size - 1
    sign = 1 if kind == DELTA else -1
    return tuple(
        tuple(Fraction(sign * (n if i == j else -1)) for j in range(size)) for i in range(size)
    )


@dataclass(frozen=True)
class SimplexSpec:
    kind: str
    vertices: Tuple[Point, ...]

    @classmethod
    def standard(cls, size: int) -> "SimplexSpec":
        return cls(DELTA, simplex_vertices(size, DELTA))

    @classmethod
    def reflected(cls, size: int) -> "SimplexSpec":
        return cls(DELTA_BAR, simplex_vertices(size, DELTA_BAR))


def simplex_distance(kind: str, p: Sequence, q: Sequence) -> Fraction:
    """Gauge distance from ``p`` to ``q``: least ``r`` with ``q`` in ``p + r*S``."""
    require_h0(p, q)
    if kind == DELTA:
        return abs(min(Fraction(b) - Fraction(a) for a, b in zip(p, q)))
    if kind == DELTA_BAR:
        return abs(min(Fraction(a) - Fraction(b) for a, b in zip(p, q)))
    raise ValueError(f"unknown simplex kind {kind!r}")


def in_scaled_simplex(kind: str, center: Sequence, radius, x: Sequence) -> bool:
    """Membership of ``x`` in ``center + radius * S`` (all in H_0)."""
    diff = [Fraction(a) - Fraction(b) for a, b in zip(x, center)]
    if kind == DELTA:
        return min(diff) >= -radius
    return max(diff) <= radius


def dplus_distance(k, p: Sequence, q: Sequence) -> Fraction:
    """Least ``r >= 0`` with ``q`` in ``delta(O, r) + delta_bar(O, r + k) + p``.

    ``x`` lies in that Minkowski sum iff some ``y`` in H_0 has
    ``y >= -r`` and ``x - y <= r + k``, i.e. iff
    ``deg+(x - k*1) <= (n+1) r``.
    """
    require_h0(p, q)
    k = Fraction(k)
    if k < 0:
        raise ValueError("k must be nonnegative")
    size = len(p)
    return Fraction(degplus([Fraction(b) - Fraction(a) - k for a, b in zip(p, q)]), size)


def dplus_by_intersection(k, p: Sequence, q: Sequence) -> Fraction:
    """Same quantity from the disjointness threshold of ``delta(p, r)`` and ``delta(q, r + k)``.

    The two simplices meet iff some ``X`` in H_0 has ``X >= p - r`` and
    ``X >= q - r - k``, i.e. iff ``sum_i max(p_i, q_i - k) <= (n+1) r``.
    """
    require_h0(p, q)
    k = Fraction(k)
    size = len(p)
    return max(Fraction(0), sum(max(Fraction(a), Fraction(b) - k) for a, b in zip(p, q)) / size)


def format_point(p: Sequence) -> str:
    return ",".join(str(Fraction(x)) for x in p)
