"""Divisors, chip-firing equivalence, reduced divisors and effectivity.

A divisor is a tuple of ints, one per vertex.  Firing a vertex set ``S``
once sends one chip along every edge leaving ``S``; in matrix form the
divisor ``d`` becomes ``d - Q 1_S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor, lcm
from typing import Sequence, Tuple, Union

from bnrank.graph import Multigraph, reduced_laplacian
from bnrank.linalg import mat_vec, rational_inverse

Divisor = Tuple[int, ...]


class DimensionMismatch(ValueError):
    pass


def degree(d: Sequence[int]) -> int:
    return sum(d)


def degplus(d: Sequence[int]) -> int:
    return sum(x for x in d if x > 0)


def _check(g: Multigraph, *divisors: Sequence[int]) -> None:
    for d in divisors:
        if len(d) != g.vertex_count:
            raise DimensionMismatch(f"divisor has {len(d)} entries, graph has {g.vertex_count} vertices")


def fire(g: Multigraph, d: Sequence[int], w: Sequence[int]) -> Divisor:
    """``d - Q w``: vertex ``v`` fires ``w[v]`` times (negative means borrows)."""
    qw = mat_vec(g.laplacian, w)
    return tuple(a - b for a, b in zip(d, qw))


@dataclass(frozen=True)
class EquivalenceCertificate:
    """``a - b == Q firing_vector``."""

    firing_vector: Tuple[int, ...]


def linearly_equivalent(g: Multigraph, a: Sequence[int], b: Sequence[int]) -> EquivalenceCertificate | None:
    _check(g, a, b)
    diff = [x - y for x, y in zip(a, b)]
    x = g.lattice.integer_coefficients(diff)
    if x is None:
        return None
    # basis rows are Q's rows 0..n-1 and Q is symmetric, so Q (x, 0) = diff
    return EquivalenceCertificate(tuple(x) + (0,))


@lru_cache(maxsize=None)
def _base_data(g: Multigraph, base: int):
    """Reduced Laplacian at ``base``, its inverse, and a positive borrow vector."""
    keep = [i for i in range(g.vertex_count) if i != base]
    red = reduced_laplacian(g, base)
    inv = rational_inverse(red)
    # inv has positive entries, so inv @ 1 scaled to integers borrows
    # the same positive amount at every non-base vertex
    s = [sum(row) for row in inv]
    scale = lcm(*(x.denominator for x in s))
    sigma = [int(x * scale) for x in s]
    return keep, inv, sigma, scale


def reduce_with_firing(g: Multigraph, d: Sequence[int], base: int = 0) -> Tuple[Divisor, Tuple[int, ...]]:
    """The base-reduced divisor of ``d`` and ``w`` with ``d - Q w`` equal to it."""
    _check(g, d)
    size = g.vertex_count
    keep, inv, sigma, scale = _base_data(g, base)
    firing = [0] * size

    # rational solve, then round: the residue is small but may be negative
    c = [Fraction(d[i]) for i in keep]
    z = [sum((a * b for a, b in zip(row, c)), Fraction(0)) for row in inv]
    for idx, v in enumerate(keep):
        firing[v] = floor(z[idx])
    cur = list(fire(g, d, firing))
    low = min(cur[v] for v in keep)
    if low < 0:
        times = -(low // scale)  # ceil(-low / scale)
        borrow = [0] * size
        for idx, v in enumerate(keep):
            borrow[v] = -times * sigma[idx]
            firing[v] -= times * sigma[idx]
        cur = list(fire(g, cur, borrow))

    lap = g.laplacian
    while True:
        burnt = [False] * size
        burnt[base] = True
        changed = True
        while changed:
            changed = False
            for v in range(size):
                if burnt[v]:
                    continue
                exposure = sum(-lap[v][u] for u in range(size) if burnt[u] and u != v)
                if exposure > cur[v]:
                    burnt[v] = True
                    changed = True
        unburnt = [v for v in range(size) if not burnt[v]]
        if not unburnt:
            return tuple(cur), tuple(firing)
        inside = set(unburnt)
        times = None
        for v in unburnt:
            out = sum(-lap[v][u] for u in range(size) if u not in inside)
            if out:
                t = cur[v] // out
                times = t if times is None else min(times, t)
        for v in unburnt:
            firing[v] += times
        cur = list(fire(g, cur, [times if v in inside else 0 for v in range(size)]))


def reduced_divisor(g: Multigraph, d: Sequence[int], base: int = 0) -> Divisor:
    return reduce_with_firing(g, d, base)[0]


def is_effective(g: Multigraph, d: Sequence[int]) -> bool:
    """Whether ``d`` is equivalent to a nonnegative divisor."""
    if sum(d) < 0:
        return False
    return reduced_divisor(g, d, 0)[0] >= 0


@dataclass(frozen=True)
class PositiveCertificate:
    """``q`` in L_G with ``d - q >= 0``."""

    q: Tuple[int, ...]


@dataclass(frozen=True)
class NegativeCertificate:
    """``q`` in L_G with ``d - nu_pi + q <= 0``: ``d`` sits below an orientation point."""

    permutation: Tuple[int, ...]
    q: Tuple[int, ...]


EffectivityCertificate = Union[PositiveCertificate, NegativeCertificate]


def is_effective_class(g: Multigraph, d: Sequence[int]) -> Tuple[bool, EffectivityCertificate]:
    """Effectivity test with a checkable certificate either way.

    The positive side comes from reduction at vertex 0; the negative side
    is the orientation witness found by the rank engine's sweep.
    """
    _check(g, d)
    red = reduced_divisor(g, d, 0)
    if red[0] >= 0:
        return True, PositiveCertificate(tuple(a - b for a, b in zip(d, red)))
    from bnrank.rank import negative_witness

    perm, q = negative_witness(g, d)
    return False, NegativeCertificate(perm, q)


def verify_certificate(g: Multigraph, d: Sequence[int], cert: EffectivityCertificate) -> bool:
    if len(d) != g.vertex_count or len(cert.q) != g.vertex_count:
        return False
    if not g.lattice.contains(cert.q):
        return False
    if isinstance(cert, PositiveCertificate):
        return all(a - b >= 0 for a, b in zip(d, cert.q))
    from bnrank.rank import orientation_nu

    if sorted(cert.permutation) != list(range(g.vertex_count)):
        return False
    nu = orientation_nu(g, cert.permutation)
    return all(a - b + c <= 0 for a, b, c in zip(d, nu, cert.q))
