from __future__ import annotations

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from bnrank.linalg import bareiss_det, hermite_rows, mat_mul, rational_det, rational_inverse, smith_invariants
from oracles import leibniz_det, snf_by_minors

small = st.integers(-6, 6)


def square(size):
    return st.lists(st.lists(small, min_size=size, max_size=size), min_size=size, max_size=size)


@given(st.integers(1, 4).flatmap(square))
def test_bareiss_matches_leibniz(m):
    assert bareiss_det(m) == leibniz_det(m)
    assert rational_det(m) == leibniz_det(m)


@given(st.integers(1, 3).flatmap(square))
def test_smith_matches_minor_gcds(m):
    assert smith_invariants(m) == snf_by_minors(m)


@given(st.integers(1, 4).flatmap(square))
def test_inverse_roundtrip(m):
    if leibniz_det(m) == 0:
        return
    inv = rational_inverse(m)
    ident = mat_mul(m, inv)
    assert ident == [[Fraction(int(i == j)) for j in range(len(m))] for i in range(len(m))]


def test_hermite_rows_shape():
    basis = [[2, -1, -1], [-1, 2, -1]]
    h = hermite_rows(basis)
    assert h[1][0] == 0
    assert h[0][0] > 0 and h[1][1] > 0
    # same lattice: unimodular change of basis
    assert abs(bareiss_det([r[:2] for r in h])) == abs(bareiss_det([r[:2] for r in basis]))
