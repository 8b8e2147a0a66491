from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

import pytest

from bnrank.corpus import complete
from bnrank.geometry.automorphism import (
    BadAlphaShape,
    HeightNotDivisor,
    LinearMapH0,
    SingularMap,
    complete_graph_automorphism,
    verify_critical_automorphism,
)
from bnrank.geometry.simplex import project_h0
from oracles import ClassOracle, orientation_nu


def zeros(n):
    return [[0] * n for _ in range(n)]


def all_alphas(n):
    slots = [(i, j) for i in range(n) for j in range(i)]
    for values in product((-1, 0, 1), repeat=len(slots)):
        a = zeros(n)
        for (i, j), v in zip(slots, values):
            a[i][j] = v
        yield a


def test_identity_parameters():
    for size in (3, 4, 5):
        n = size - 1
        m = complete_graph_automorphism(size, tuple(range(size)), n, zeros(n))
        for b in complete(size).laplacian:
            assert m(b) == tuple(Fraction(x) for x in b)


def test_k3_swap():
    m = complete_graph_automorphism(3, (1, 0, 2), 2, zeros(2))
    b = complete(3).laplacian
    assert m(b[0]) == b[1] and m(b[1]) == b[0]
    assert verify_critical_automorphism(complete(3), m)


def test_parameter_errors():
    with pytest.raises(HeightNotDivisor):
        complete_graph_automorphism(4, (0, 1, 2, 3), 2, zeros(3))
    with pytest.raises(BadAlphaShape):
        complete_graph_automorphism(4, (0, 1, 2, 3), 3, [[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    with pytest.raises(BadAlphaShape):
        complete_graph_automorphism(4, (0, 1, 2, 3), 3, zeros(2))


def _independent_crit_check(size, m):
    """Every Crit point must map to something congruent to a Crit point."""
    g = complete(size)
    oracle = ClassOracle(g)
    crit = {project_h0([-x for x in orientation_nu(g, p)]) for p in permutations(range(size))}
    for c in crit:
        image = m(c)
        if not any(oracle.key([a - b for a, b in zip(image, other)]) == (0,) * (size - 1) for other in crit):
            return False
    return True


def test_k4_shear_by_height_n_is_not_critical():
    # alpha_10 = 1 with h = n = 3: Crit classes have denominator n + 1 = 4
    a = zeros(3)
    a[1][0] = 1
    m = complete_graph_automorphism(4, (0, 1, 2, 3), 3, a)
    assert not verify_critical_automorphism(complete(4), m)
    assert not _independent_crit_check(4, m)


def test_heights_multiple_of_size_are_critical():
    for size in (3, 4):
        n = size - 1
        g = complete(size)
        for pi in permutations(range(size)):
            for a in all_alphas(n):
                m = complete_graph_automorphism(size, pi, size, a)
                assert verify_critical_automorphism(g, m)
    m = complete_graph_automorphism(5, (2, 0, 4, 1, 3), 10, [[0, 0, 0, 0], [1, 0, 0, 0], [-1, 1, 0, 0], [1, 1, -1, 0]])
    assert verify_critical_automorphism(complete(5), m)
    assert _independent_crit_check(5, m)


def test_zero_alphas_are_critical_for_every_divisor_height():
    for size in (3, 4, 5):
        n = size - 1
        for pi in permutations(range(size)):
            for h in (d for d in range(1, n + 1) if n % d == 0):
                assert verify_critical_automorphism(complete(size), complete_graph_automorphism(size, pi, h, zeros(n)))


def test_verify_examples(graphs):
    for name in ("k4", "cycle4", "triangle"):
        g = graphs[name]
        size = g.vertex_count
        ident = LinearMapH0.from_matrix([[int(i == j) for j in range(size)] for i in range(size)])
        assert verify_critical_automorphism(g, ident)
        rot = LinearMapH0.from_matrix([[int(j == (i + 1) % size) for j in range(size)] for i in range(size)])
        assert verify_critical_automorphism(g, rot)
        double = LinearMapH0.from_matrix([[2 * int(i == j) for j in range(size)] for i in range(size)])
        assert not verify_critical_automorphism(g, double)


def test_verify_singular(triangle):
    b = triangle.laplacian
    m = LinearMapH0.from_basis_images(b[:2], [[0, 0, 0], list(b[1])])
    with pytest.raises(SingularMap):
        verify_critical_automorphism(triangle, m)


def test_preserves_h0():
    neg = LinearMapH0.from_matrix([[-1, 0], [0, -1]])
    assert neg.preserves_h0()
    assert not LinearMapH0.from_matrix([[1, 0], [1, 1]]).preserves_h0()
