"""Exact minimization over a lattice coset ``w + L_G``.

Two objectives are supported: ``deg+`` (sum of positive entries), which
drives the rank computation, and the maximum coordinate, which gives the
simplicial distance from a point to the lattice.

The search runs in the echelon basis of the lattice: fixing the ``k``-th
echelon coefficient fixes coordinate ``k`` of ``w + q`` for good, and the
coordinates still open always sum to a known value because the lattice
lies in H_0.  That sum yields an exact lower bound for the open part, so a
depth-first search with incumbent pruning visits a finite set of nodes and
returns the true optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence, Tuple

from bnrank.lattice import LaplacianLattice


def degree(v: Sequence) -> int:
    return sum(v)


def degplus(v: Sequence) -> int:
    return sum(x for x in v if x > 0)


def degplus_lower_bound(w: Sequence[int]) -> int:
    """``max(0, deg w)``; every member of ``w + L_G`` has the same degree."""
    return max(0, sum(w))


@dataclass(frozen=True)
class CosetProblem:
    basis: Tuple[Tuple[int, ...], ...]
    offset: Tuple[int, ...]
    bound_box: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class CosetSolution:
    value: int
    x: Tuple[int, ...]
    q: Tuple[int, ...]


def coset_problem(lattice: LaplacianLattice, w: Sequence[int]) -> CosetProblem:
    """Package ``w`` with a coefficient box that contains every optimum.

    Any optimum has ``deg+(w + q) <= deg+(w)``, so
    ``l1(q) <= 2 deg+(w) - deg(w) + l1(w)``; each coefficient of ``q`` is a
    row of the rational left inverse applied to ``q``.
    """
    w = tuple(w)
    radius = 2 * degplus(w) - sum(w) + sum(abs(x) for x in w)
    box = []
    for row in lattice.inverse:
        b = floor(max(abs(c) for c in row) * radius)
        box.append((-b, b))
    return CosetProblem(lattice.basis, w, tuple(box))


def _span(lo, hi, c, h) -> range:
    """Integers ``x`` with ``lo <= c + x*h <= hi`` (``h > 0``)."""
    # floor division keeps ints and Fractions exact
    return range(-((c - lo) // h), (hi - c) // h + 1)


def _degplus_search(echelon, w, limit: int, collect: bool):
    """Points ``q`` of the lattice with ``deg+(w + q) <= limit``.

    ``collect=False``: tighten ``limit`` after every hit and return the last
    (hence best) hit.  ``collect=True``: return all hits at fixed ``limit``.
    """
    n = len(echelon)
    cur = list(w)
    state = {"limit": limit, "hits": []}
    floor_value = max(0, sum(w))

    def rec(k: int, partial: int, rem: int) -> bool:
        lim = state["limit"]
        if k == n:
            cost = partial + max(0, rem)
            if cost <= lim:
                q = tuple(a - b for a, b in zip(cur, w))
                if collect:
                    state["hits"].append(q)
                else:
                    state["hits"] = [(cost, q)]
                    state["limit"] = cost - 1
                    return cost <= floor_value
            return False
        row = echelon[k]
        h = row[k]
        c = cur[k]
        budget = lim - partial
        xs = sorted(_span(rem - budget, budget, c, h), key=lambda x: abs(c + x * h))
        for x in xs:
            v = c + x * h
            pos = v if v > 0 else 0
            if partial + pos + max(0, rem - v) > state["limit"]:
                continue
            if x:
                for j in range(k, n + 1):
                    cur[j] += x * row[j]
            stop = rec(k + 1, partial + pos, rem - v)
            if x:
                for j in range(k, n + 1):
                    cur[j] -= x * row[j]
            if stop:
                return True
        return False

    rec(0, 0, sum(w))
    return state["hits"]


def coset_min_degplus(lattice: LaplacianLattice, w: Sequence[int]) -> CosetSolution:
    """Exact ``min deg+(w + q)`` over ``q in L_G``.

    Ties are broken towards the lexicographically least coefficient vector
    ``x`` (in the Laplacian-row basis), so the witness is deterministic.
    """
    w = tuple(int(a) for a in w)
    start = degplus(w)
    best = start
    if start > degplus_lower_bound(w):
        hits = _degplus_search(lattice.echelon, w, start - 1, collect=False)
        if hits:
            best = hits[0][0]
    optima = _degplus_search(lattice.echelon, w, best, collect=True)
    candidates = [(lattice.integer_coefficients(q), q) for q in optima]
    x, q = min(candidates)
    return CosetSolution(best, x, q)


def coset_min_maxcoord(lattice: LaplacianLattice, w: Sequence) -> Tuple[Fraction, Tuple[int, ...]]:
    """Exact ``min max_i (w + q)_i`` over ``q in L_G`` with a minimizing ``q``.

    ``w`` may be rational.  The minimizer returned is the first one found;
    callers only rely on the value.
    """
    echelon = lattice.echelon
    n = len(echelon)
    w = [Fraction(a) for a in w]
    cur = list(w)
    total = sum(w)
    floor_value = total / (n + 1)
    best = {"value": max(w), "q": tuple(0 for _ in w)}

    def rec(k: int, top, rem) -> bool:
        lim = best["value"]
        if k == n:
            cost = rem if top is None else max(top, rem)
            if cost < lim:
                best["value"] = cost
                best["q"] = tuple(int(a - b) for a, b in zip(cur, w))
                return cost <= floor_value
            return False
        row = echelon[k]
        h = row[k]
        c = cur[k]
        others = n - k  # open coordinates after this one
        # cheapest first: the max is smallest near the balanced split
        target = rem / (others + 1)
        xs = sorted(_span(rem - lim * others, lim, c, h), key=lambda x: abs(c + x * h - target))
        for x in xs:
            v = c + x * h
            bound = max(v, (rem - v) / others)
            if top is not None and top > bound:
                bound = top
            if bound >= best["value"]:
                continue
            if x:
                for j in range(k, n + 1):
                    cur[j] += x * row[j]
            stop = rec(k + 1, v if top is None or v > top else top, rem - v)
            if x:
                for j in range(k, n + 1):
                    cur[j] -= x * row[j]
            if stop:
                return True
        return False

    if best["value"] > floor_value:
        rec(0, None, total)
    return best["value"], best["q"]
