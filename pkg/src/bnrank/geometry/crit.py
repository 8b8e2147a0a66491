"""Local maxima of the simplicial lattice distance and the covering radius."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import List, Sequence, Tuple

from bnrank.geometry.simplex import DELTA, DELTA_BAR, Point, project_h0, require_h0
from bnrank.graph import Multigraph
from bnrank.ilp import coset_min_maxcoord
from bnrank.lattice import LaplacianLattice

GRID = 1024


def h_distance(lattice: LaplacianLattice, p: Sequence, kind: str = DELTA) -> Fraction:
    """``min over q in L of d_S(p, q)`` for ``S`` the simplex or its reflection.

    ``d_delta(p, q) = max_i (p - q)_i`` on H_0, so the minimum is a
    max-coordinate coset problem; ``L = -L`` lets the sign of ``q`` float.
    """
    require_h0(p)
    if kind == DELTA:
        return coset_min_maxcoord(lattice, p)[0]
    if kind == DELTA_BAR:
        return coset_min_maxcoord(lattice, [-Fraction(x) for x in p])[0]
    raise ValueError(f"unknown simplex kind {kind!r}")


def crit_points(g: Multigraph) -> List[Tuple[Tuple[int, ...], Point]]:
    """``(pi, pi_0(-nu_pi))`` for every permutation, first permutation per point.

    These project the orientation points ``-nu_pi + L`` and are the local
    maxima of ``h_delta``; ``pi_0(+nu_pi)`` would give those of ``h_delta_bar``.
    """
    from bnrank.rank import orientation_nu

    seen = {}
    for perm in permutations(range(g.vertex_count)):
        c = project_h0([-x for x in orientation_nu(g, perm)])
        if c not in seen:
            seen[c] = perm
    return [(perm, c) for c, perm in seen.items()]


@lru_cache(maxsize=None)
def crit_classes(g: Multigraph) -> Tuple[Point, ...]:
    """One representative per class of Crit / L_G."""
    lattice = g.lattice
    reps = {}
    for _, c in crit_points(g):
        reps.setdefault(lattice.class_key(c), c)
    return tuple(reps.values())


@lru_cache(maxsize=None)
def covering_radius(g: Multigraph) -> Fraction:
    """``max_p h_delta_bar(p)``, attained on ``-Crit``."""
    lattice = g.lattice
    return max(h_distance(lattice, [-x for x in c], DELTA_BAR) for c in crit_classes(g))


def random_grid_point(rng: random.Random, size: int, scale=1) -> Point:
    """Random point of H_0 with coordinates on a ``1/GRID`` grid, before projection."""
    v = [Fraction(rng.randint(-GRID, GRID), GRID) * scale for _ in range(size)]
    return project_h0(v)


def local_max_verify(
    g: Multigraph,
    c: Sequence,
    epsilon,
    samples: int,
    seed: int = 0,
    kind: str = "max",
) -> bool:
    """Sampled check that ``c`` is a local max (or min) of ``h_delta``.

    Perturbations are rescaled to l1 norm at most ``epsilon``, which keeps
    them inside the Euclidean ball.  Not a proof.
    """
    require_h0(c)
    lattice = g.lattice
    rng = random.Random(seed)
    eps = Fraction(epsilon)
    base = h_distance(lattice, c)
    for _ in range(samples):
        step = random_grid_point(rng, len(c))
        norm = sum(abs(x) for x in step)
        if norm == 0:
            continue
        frac = Fraction(rng.randint(1, GRID), GRID)
        other = [Fraction(a) + b * eps * frac / norm for a, b in zip(c, step)]
        value = h_distance(lattice, other)
        if kind == "max" and value > base:
            return False
        if kind == "min" and value < base:
            return False
    return True
