from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bnrank.corpus import corpus
from bnrank.divisor import fire
from bnrank.graph import canonical_divisor, genus
from bnrank.rank import (
    DegreeOutOfRange,
    check_witness,
    decide_rank_at_most,
    enumerate_orientation_points,
    orientation_nu,
    rank,
    rank_binary_search,
    rank_bruteforce,
    rank_geometric,
)
from oracles import ClassOracle
from oracles import orientation_nu as oracle_nu

GRAPHS = corpus()
names = st.sampled_from(sorted(GRAPHS))


def test_orientation_examples(triangle, banana3):
    points = list(enumerate_orientation_points(triangle))
    assert len(points) == 6
    assert points[0].permutation == (0, 1, 2) and points[0].nu == (-1, 0, 1)
    assert points[-1].nu == (1, 0, -1)
    assert {p.nu for p in enumerate_orientation_points(banana3)} == {(-1, 2), (2, -1)}


def test_orientation_degree(graphs):
    for g in graphs.values():
        for p in enumerate_orientation_points(g):
            assert sum(p.nu) == genus(g) - 1
            assert list(p.nu) == oracle_nu(g, p.permutation)
            assert sum(p.c_pi) == 0


def test_rank_examples(graphs, triangle, banana3, k4):
    assert rank_bruteforce(triangle, (0, 0, 0)).rank == 0
    assert rank_bruteforce(triangle, (-1, 0, 0)).rank == -1
    assert rank_bruteforce(banana3, (1, 0)).rank == 0
    assert rank_geometric(triangle, (0, 0, 0)).rank == 0
    assert rank_geometric(banana3, (1, 0)).rank == 0
    assert rank_geometric(banana3, (0, 0)).rank == 0
    assert rank(triangle, (3, 0, 0)).rank == 2
    assert rank(k4, canonical_divisor(k4)).rank == 2
    for g in graphs.values():
        assert rank(g, (-5,) + (0,) * (g.vertex_count - 1)).rank == -1


def test_geometric_degree_precondition(triangle):
    with pytest.raises(DegreeOutOfRange):
        rank_geometric(triangle, (1, 0, 0))
    with pytest.raises(DegreeOutOfRange):
        decide_rank_at_most(triangle, (-1, 0, 0), 0)


def test_decide_examples(triangle, banana3):
    assert decide_rank_at_most(triangle, (0, 0, 0), 0)
    assert not decide_rank_at_most(triangle, (0, 0, 0), -1)
    assert decide_rank_at_most(banana3, (1, 0), 1)


@given(names, st.data())
def test_rank_matches_class_oracle(name, data):
    g = GRAPHS[name]
    d = tuple(data.draw(st.lists(st.integers(-2, 3), min_size=g.vertex_count, max_size=g.vertex_count)))
    assert rank(g, d).rank == ClassOracle(g).rank(d)


@given(names, st.data())
def test_equivalence_invariance(name, data):
    g = GRAPHS[name]
    size = g.vertex_count
    d = data.draw(st.lists(st.integers(-3, 4), min_size=size, max_size=size))
    w = data.draw(st.lists(st.integers(-3, 3), min_size=size, max_size=size))
    assert rank(g, d).rank == rank(g, fire(g, d, w)).rank


@given(names, st.data())
def test_relabel_equivariance(name, data):
    g = GRAPHS[name]
    size = g.vertex_count
    d = data.draw(st.lists(st.integers(-3, 4), min_size=size, max_size=size))
    sigma = data.draw(st.permutations(range(size)))
    moved = [0] * size
    for v in range(size):
        moved[sigma[v]] = d[v]
    assert rank(g.relabel(sigma), moved).rank == rank(g, d).rank


@given(names, st.data())
def test_monotone_in_chips(name, data):
    g = GRAPHS[name]
    size = g.vertex_count
    d = data.draw(st.lists(st.integers(-3, 3), min_size=size, max_size=size))
    v = data.draw(st.integers(0, size - 1))
    bumped = list(d)
    bumped[v] += 1
    assert rank(g, bumped).rank - rank(g, d).rank in (0, 1)


@given(names, st.data())
def test_witness_valid(name, data):
    g = GRAPHS[name]
    size = g.vertex_count
    gen = genus(g)
    d = data.draw(
        st.lists(st.integers(-3, 3), min_size=size, max_size=size).filter(lambda x: 0 <= sum(x) <= gen - 1)
    )
    result = rank_geometric(g, d)
    w = result.witness
    assert check_witness(g, d, result)
    nu = orientation_nu(g, w.permutation)
    assert sum(max(0, a - b + c) for a, b, c in zip(d, nu, w.q)) == result.rank + 1


def test_decide_matches_rank(graphs):
    rng = random.Random(2)
    for g in graphs.values():
        gen = genus(g)
        for _ in range(15):
            d = [rng.randint(-2, 3) for _ in range(g.vertex_count)]
            if not 0 <= sum(d) <= gen - 1:
                continue
            r = rank(g, d).rank
            for r0 in range(-1, gen):
                assert decide_rank_at_most(g, d, r0) == (r <= r0)
            assert rank_binary_search(g, d).rank == r


def test_parallel_sweep_matches_serial(graphs):
    for name in ("k4", "cycle5", "mixed4"):
        g = graphs[name]
        d = (0,) * g.vertex_count
        assert rank_geometric(g, d, parallel=3) == rank_geometric(g, d, parallel=1)
