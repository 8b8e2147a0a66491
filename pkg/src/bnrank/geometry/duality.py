"""Sampled checks that the simplex arrangements tile H_0.

For ``0 <= t <= Cov`` the sets

    A_t = union over q in L of delta_bar(q, t)
    B_s = union over c in Crit of delta(c, s),   s = Cov - t

should cover H_0 with disjoint interiors.  In coordinates,
``p`` lies in ``delta_bar(q, t)`` iff ``max(p - q) <= t`` and in
``delta(c, s)`` iff ``max(c - p) <= s``, so both memberships reduce to
max-coordinate coset minima.  A sample whose A-distance equals ``t``
exactly sits on the common boundary and is counted separately.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Sequence, Tuple

from bnrank.geometry.automorphism import LinearMapH0, SingularMap
from bnrank.geometry.crit import GRID, covering_radius, crit_classes
from bnrank.geometry.simplex import DELTA, Point, simplex_vertices
from bnrank.graph import Multigraph
from bnrank.ilp import coset_min_maxcoord
from bnrank.linalg import rational_inverse, vec_mat


class TOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class TilingReport:
    t: Fraction
    cov: Fraction
    checked: int
    in_a: int
    in_b: int
    boundary: int
    violations: int
    transport_failures: int = 0


@dataclass(frozen=True)
class SampleProfile:
    """Distances of one sample to the lattice and to the Crit set.

    ``q`` and ``c`` are the minimizing lattice point and Crit point, kept
    so mapped checks can reuse them.
    """

    point: Point
    h_a: Fraction
    h_b: Fraction
    q: Tuple[int, ...]
    c: Point


def sample_points(g: Multigraph, samples: int, seed: int) -> List[Point]:
    """Seeded points ``basis^T u`` with ``u`` on the ``1/GRID`` grid of ``[0, 1)^n``."""
    rng = random.Random(seed)
    basis = g.lattice.basis
    out = []
    for _ in range(samples):
        u = [Fraction(rng.randrange(GRID), GRID) for _ in basis]
        out.append(tuple(vec_mat(u, basis)))
    return out


def profile_point(g: Multigraph, p: Sequence) -> SampleProfile:
    lattice = g.lattice
    # min over q of max(p - q); L = -L turns this into min max(p + q)
    h_a, q = coset_min_maxcoord(lattice, p)
    best = None
    for c in crit_classes(g):
        value, shift = coset_min_maxcoord(lattice, [a - b for a, b in zip(c, p)])
        if best is None or value < best[0]:
            best = (value, tuple(a + s for a, s in zip(c, shift)))
    return SampleProfile(tuple(p), h_a, best[0], tuple(-x for x in q), best[1])


def tiling_profile(g: Multigraph, samples: int, seed: int) -> List[SampleProfile]:
    return [profile_point(g, p) for p in sample_points(g, samples, seed)]


def classify(profiles: Sequence[SampleProfile], t, cov) -> TilingReport:
    t, cov = Fraction(t), Fraction(cov)
    in_a = in_b = boundary = violations = 0
    for pr in profiles:
        a = pr.h_a < t
        b = pr.h_b <= cov - t
        if pr.h_a == t:
            boundary += 1
            continue
        in_a += a
        in_b += b
        if a == b:
            violations += 1
    return TilingReport(t, cov, len(profiles), in_a, in_b, boundary, violations)


def _check_t(g: Multigraph, t) -> Tuple[Fraction, Fraction]:
    t = Fraction(t)
    cov = covering_radius(g)
    if not 0 <= t <= cov:
        raise TOutOfRange(f"t={t} outside [0, {cov}]")
    return t, cov


def duality_tiling_check(g: Multigraph, t, samples: int, seed: int = 0) -> TilingReport:
    t, cov = _check_t(g, t)
    return classify(tiling_profile(g, samples, seed), t, cov)


class SimplexGauge:
    """Gauge of the simplex with vertices ``M t_i``, evaluated from those vertices.

    ``y`` is written as ``sum_i a_i M t_i`` with ``a_n = 0``; since the
    vertices sum to zero, ``y`` lies in ``r S`` iff ``a + s*1 >= 0`` with
    ``sum(a + s*1) = r`` for some ``s``, giving
    ``gauge(y) = sum(a) - (n+1) min(a)``.
    """

    def __init__(self, m: LinearMapH0, size: int) -> None:
        n = size - 1
        verts = [m(t) for t in simplex_vertices(size, DELTA)]
        # column i of the system is vertex i restricted to the first n coordinates
        try:
            self._inv = rational_inverse([[verts[i][r] for i in range(n)] for r in range(n)])
        except ValueError:
            raise SingularMap("mapped simplex is degenerate") from None
        self.vertices = verts
        self.size = size

    def __call__(self, y: Sequence) -> Fraction:
        n = self.size - 1
        a = [sum((c * Fraction(v) for c, v in zip(row, y[:n])), Fraction(0)) for row in self._inv]
        a.append(Fraction(0))
        return sum(a) - self.size * min(a)


def mapped_duality_check(g: Multigraph, m: LinearMapH0, t, samples: int, seed: int = 0) -> TilingReport:
    """Tiling for ``S = M(delta)`` on ``M(L)``, checked against the unmapped picture.

    For each sample ``p`` the distances at ``M(p)`` are evaluated with the
    gauge of ``S`` at ``M(q)`` for the unmapped minimizer ``q`` and at its
    neighbours in coefficient space; the mapped value must equal the
    unmapped one and no neighbour may beat it.  Membership of ``M(p)`` in
    both mapped arrangements must match membership of ``p`` in the
    original ones.
    """
    t, cov = _check_t(g, t)
    size = g.vertex_count
    lattice = g.lattice
    if m.size != size or not m.preserves_h0():
        raise ValueError("map does not act on H_0 of this graph")
    if m.restricted_det(lattice.basis) == 0:
        raise SingularMap("map is singular on H_0")
    gauge = SimplexGauge(m, size)
    steps = [s for s in product((-1, 0, 1), repeat=lattice.dim) if any(s)]
    mapped_basis = [m(b) for b in lattice.basis]

    def mapped_min(anchor: Sequence, target: Point) -> Tuple[Fraction, Fraction]:
        # value at the anchor and the best value over its neighbours
        here = gauge([a - b for a, b in zip(anchor, target)])
        near = min(
            gauge([a + s - b for a, s, b in zip(anchor, vec_mat(step, mapped_basis), target)])
            for step in steps
        )
        return here, near

    failures = 0
    profiles = []
    for pr in tiling_profile(g, samples, seed):
        mp = m(pr.point)
        a_here, a_near = mapped_min(m(pr.q), mp)
        b_here, b_near = mapped_min(mp, m(pr.c))
        if a_here != pr.h_a or b_here != pr.h_b or a_near < a_here or b_near < b_here:
            failures += 1
        profiles.append(SampleProfile(mp, a_here, b_here, pr.q, pr.c))
    base = classify(profiles, t, cov)
    return TilingReport(base.t, base.cov, base.checked, base.in_a, base.in_b, base.boundary, base.violations, failures)


def distance_identity_gap(profile: SampleProfile, cov) -> Fraction:
    """``h_A + h_B - Cov``; zero whenever the arrangements tile."""
    return profile.h_a + profile.h_b - Fraction(cov)
