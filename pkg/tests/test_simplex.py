from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bnrank.geometry.polytope import vertex_hull_contains, polytope_vertices
from bnrank.geometry.simplex import (
    DELTA,
    DELTA_BAR,
    NotInH0,
    SimplexSpec,
    dplus_by_intersection,
    dplus_distance,
    in_scaled_simplex,
    project_h0,
    simplex_distance,
)
from bnrank.ilp import degplus

F = Fraction


def rationals(lo=-3, hi=3, den=6):
    return st.integers(lo * den, hi * den).map(lambda x: Fraction(x, den))


def h0_points(size):
    return st.lists(rationals(), min_size=size, max_size=size).map(project_h0)


def test_projection_examples():
    assert project_h0((1, 1, 1)) == (0, 0, 0)
    assert project_h0((1, 0, 0)) == (F(2, 3), F(-1, 3), F(-1, 3))
    assert project_h0((F(1, 2), F(-1, 2))) == (F(1, 2), F(-1, 2))


def test_simplex_vertices():
    standard = SimplexSpec.standard(3)
    assert standard.vertices == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
    assert SimplexSpec.reflected(3).vertices == tuple(tuple(-x for x in v) for v in standard.vertices)
    assert [sum(c) for c in zip(*standard.vertices)] == [0, 0, 0]


def test_distance_examples():
    o = (0, 0, 0)
    assert simplex_distance(DELTA, o, (1, -1, 0)) == 1
    assert simplex_distance(DELTA, (1, -1, 0), (1, -1, 0)) == 0
    assert simplex_distance(DELTA_BAR, o, (1, -1, 0)) == 1
    q = (2, -1, -1)
    assert simplex_distance(DELTA, o, q) == 1
    assert simplex_distance(DELTA, q, o) == 2
    with pytest.raises(NotInH0):
        simplex_distance(DELTA, (1, 0, 0), o)


@given(st.sampled_from([DELTA, DELTA_BAR]), st.integers(3, 5).flatmap(lambda n: st.tuples(h0_points(n), h0_points(n))))
def test_distance_is_least_scaling(kind, pq):
    p, q = pq
    r = simplex_distance(kind, p, q)
    assert in_scaled_simplex(kind, p, r, q)
    if r > 0:
        assert not in_scaled_simplex(kind, p, r - F(1, 1000), q)


@given(st.integers(3, 5).flatmap(lambda n: st.tuples(h0_points(n), h0_points(n), h0_points(n), h0_points(n))),
       st.fractions(0, 1, max_denominator=20))
def test_gauge_properties(pts, lam):
    p, q, s, t = pts
    d = lambda a, b: simplex_distance(DELTA, a, b)  # noqa: E731
    assert d(p, s) <= d(p, q) + d(q, s)
    on_segment = tuple(a + lam * (b - a) for a, b in zip(p, q))
    assert d(p, on_segment) == lam * d(p, q)
    moved = lambda x: tuple(a + b for a, b in zip(x, t))  # noqa: E731
    assert d(moved(p), moved(q)) == d(p, q)


def test_dplus_examples():
    o = (0, 0, 0)
    assert dplus_distance(0, o, o) == 0
    assert dplus_distance(0, project_h0((1, 0, -1)), o) == F(1, 3)


@given(st.integers(3, 5).flatmap(
    lambda n: st.tuples(st.lists(rationals(), min_size=n, max_size=n), st.lists(rationals(), min_size=n, max_size=n))
))
def test_dplus_degree_identity(pq):
    big_p, big_q = pq
    if sum(big_p) < sum(big_q):
        big_p, big_q = big_q, big_p
    size = len(big_p)
    diff = [a - b for a, b in zip(big_p, big_q)]
    k = sum(diff) / size
    d = dplus_distance(k, project_h0(big_p), project_h0(big_q))
    assert degplus(diff) == size * d + sum(diff)
    assert d == dplus_by_intersection(k, project_h0(big_p), project_h0(big_q))


@given(st.integers(3, 4).flatmap(lambda n: st.tuples(h0_points(n), h0_points(n))), rationals(0, 2))
def test_dplus_is_membership_threshold(pq, k):
    p, q = pq
    d = dplus_distance(k, p, q)
    rel = tuple(b - a for a, b in zip(p, q))
    if d > 0:
        assert vertex_hull_contains(polytope_vertices(d, d + k, len(p)), rel)
        lower = d - F(1, 997)
        assert not vertex_hull_contains(polytope_vertices(lower, lower + k, len(p)), rel)


@given(st.integers(3, 5).flatmap(lambda n: st.tuples(h0_points(n), h0_points(n), h0_points(n))), rationals(0, 2))
def test_dplus_translation_invariance(pts, k):
    p, q, t = pts
    shift = lambda x: tuple(a + b for a, b in zip(x, t))  # noqa: E731
    assert dplus_distance(k, shift(p), shift(q)) == dplus_distance(k, p, q)
