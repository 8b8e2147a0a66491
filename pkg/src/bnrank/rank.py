"""Baker-Norine rank of a divisor.

The geometric method uses

    r(D) = min over permutations pi and q in L_G of deg+(D - nu_pi + q), minus 1

with the inner minimum solved exactly per permutation by
:func:`bnrank.ilp.coset_min_degplus`.  Degrees outside ``[0, g-1]`` are
dispatched with Riemann-Roch before any sweep runs.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from typing import Iterator, List, Sequence, Tuple

from bnrank.divisor import Divisor, is_effective, reduced_divisor
from bnrank.geometry.simplex import project_h0
from bnrank.graph import Multigraph, canonical_divisor, genus
from bnrank.ilp import CosetSolution, coset_min_degplus, degplus

METHODS = ("geometric", "bruteforce")


class DegreeOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class OrientationPoint:
    permutation: Tuple[int, ...]
    nu: Divisor
    c_pi: Tuple[Fraction, ...]


@dataclass(frozen=True)
class Witness:
    permutation: Tuple[int, ...]
    q: Tuple[int, ...]
    degplus: int


@dataclass(frozen=True)
class RankResult:
    rank: int
    witness: Witness | None
    method: str


@dataclass(frozen=True)
class TraceEntry:
    permutation: Tuple[int, ...]
    nu: Divisor
    solution: CosetSolution


def orientation_nu(g: Multigraph, perm: Sequence[int]) -> Divisor:
    """Indegree minus one under the acyclic orientation that follows ``perm``.

    ``perm`` lists vertices from first to last; every edge points from the
    earlier endpoint to the later one.
    """
    pos = [0] * g.vertex_count
    for i, v in enumerate(perm):
        pos[v] = i
    indeg = [0] * g.vertex_count
    for u, v, m in g.edges:
        indeg[v if pos[u] < pos[v] else u] += m
    return tuple(x - 1 for x in indeg)


def enumerate_orientation_points(g: Multigraph) -> Iterator[OrientationPoint]:
    """All ``(n+1)!`` permutations in lexicographic order (repeats kept)."""
    for perm in permutations(range(g.vertex_count)):
        nu = orientation_nu(g, perm)
        yield OrientationPoint(perm, nu, project_h0(nu))


def _perms_with_first(size: int, firsts: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    for f in firsts:
        rest = [v for v in range(size) if v != f]
        for tail in permutations(rest):
            yield (f,) + tail


def _solve_stream(g: Multigraph, d: Divisor, perms, lower: int) -> Iterator[TraceEntry]:
    """Coset minima per permutation, skipping repeated ``nu``, until one hits ``lower``."""
    lattice = g.lattice
    seen = set()
    for perm in perms:
        nu = orientation_nu(g, perm)
        if nu in seen:
            continue
        seen.add(nu)
        sol = coset_min_degplus(lattice, [a - b for a, b in zip(d, nu)])
        yield TraceEntry(perm, nu, sol)
        if sol.value <= lower:
            return


def _replay(entries, lower: int) -> Tuple[TraceEntry, List[TraceEntry]]:
    """The serial sweep's best entry and trace, from entries in permutation order.

    Entries may repeat a ``nu`` seen earlier (a later worker block does not
    know what earlier blocks saw); those are dropped here exactly as the
    serial sweep would skip them.  The first entry of least value wins,
    which is the lexicographically least permutation attaining it.
    """
    seen = set()
    best = None
    kept: List[TraceEntry] = []
    for entry in entries:
        if entry.nu in seen:
            continue
        seen.add(entry.nu)
        kept.append(entry)
        if best is None or entry.solution.value < best.solution.value:
            best = entry
        if entry.solution.value <= lower:
            break
    return best, kept


def _sweep_block(g, d, firsts, lower):
    return list(_solve_stream(g, d, _perms_with_first(g.vertex_count, firsts), lower))


def sweep(g: Multigraph, d: Sequence[int], parallel: int = 1, want_trace: bool = False):
    """Minimize ``deg+(d - nu_pi + q)`` over all permutations and lattice points.

    ``d`` is first replaced by its reduced form (same coset, smaller
    entries); the returned ``q`` is translated back so that it refers to the
    original ``d``.  With ``parallel > 1`` the permutations are split into
    contiguous blocks by leading vertex; concatenating the block results in
    order and replaying the serial skip and stop rules reproduces the serial
    answer and trace exactly.
    """
    d = tuple(d)
    red = reduced_divisor(g, d, 0)
    shift = tuple(a - b for a, b in zip(d, red))  # d = red + shift, shift in L_G
    lower = max(0, sum(d) - (genus(g) - 1))
    size = g.vertex_count
    if parallel <= 1:
        best, trace = _replay(_solve_stream(g, red, permutations(range(size)), lower), lower)
    else:
        k = min(parallel, size)
        blocks = [list(range(size))[i * size // k:(i + 1) * size // k] for i in range(k)]
        with ProcessPoolExecutor(max_workers=k) as pool:
            parts = list(pool.map(_sweep_block, [g] * k, [red] * k, blocks, [lower] * k))
        best, trace = _replay((e for part in parts for e in part), lower)

    def unshift(sol: CosetSolution) -> CosetSolution:
        q = tuple(a - b for a, b in zip(sol.q, shift))
        return CosetSolution(sol.value, g.lattice.integer_coefficients(q), q)

    value, perm, q = best.solution.value, best.permutation, unshift(best.solution).q
    if want_trace:
        trace = [TraceEntry(t.permutation, t.nu, unshift(t.solution)) for t in trace]
    else:
        trace = []
    return value, perm, q, trace


def negative_witness(g: Multigraph, d: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """``(pi, q)`` with ``d - nu_pi + q <= 0``; exists iff ``d`` is not effective."""
    value, perm, q, _ = sweep(g, d)
    if value != 0:
        raise ValueError("divisor is equivalent to an effective divisor")
    return perm, q


def rank_bruteforce(g: Multigraph, d: Sequence[int]) -> RankResult:
    """Remove chips in every possible way, smallest amounts first."""
    d = tuple(d)
    if not is_effective(g, d):
        return RankResult(-1, None, "bruteforce")
    k = 0
    while True:
        k += 1
        for picks in combinations_with_replacement(range(g.vertex_count), k):
            e = [0] * g.vertex_count
            for v in picks:
                e[v] += 1
            if not is_effective(g, [a - b for a, b in zip(d, e)]):
                return RankResult(k - 1, None, "bruteforce")


def rank_geometric(g: Multigraph, d: Sequence[int], parallel: int = 1, trace: list | None = None) -> RankResult:
    d = tuple(d)
    gen = genus(g)
    if not 0 <= sum(d) <= gen - 1:
        raise DegreeOutOfRange(f"degree {sum(d)} outside [0, {gen - 1}]")
    value, perm, q, entries = sweep(g, d, parallel, want_trace=trace is not None)
    if trace is not None:
        trace.extend(entries)
    return RankResult(value - 1, Witness(perm, q, value), "geometric")


def rank(g: Multigraph, d: Sequence[int], method: str = "geometric", parallel: int = 1) -> RankResult:
    """Rank with Riemann-Roch dispatch; ``method`` handles degrees in ``[0, g-1]``."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    d = tuple(d)
    deg = sum(d)
    gen = genus(g)
    if deg < 0:
        return RankResult(-1, None, "dispatch")
    if deg > 2 * gen - 2:
        return RankResult(deg - gen, None, "dispatch")
    if deg >= gen:
        dual = tuple(k - x for k, x in zip(canonical_divisor(g), d))
        inner = rank(g, dual, method, parallel)
        return RankResult(inner.rank + deg - (gen - 1), None, "dispatch")
    if method == "bruteforce":
        return rank_bruteforce(g, d)
    return rank_geometric(g, d, parallel)


def decide_rank_at_most(g: Multigraph, d: Sequence[int], r0: int) -> bool:
    """Whether ``r(d) <= r0``, as a polytope-arrangement membership test.

    With ``R = r0 + 1``, ``r(d) <= r0`` iff ``pi_0(d)`` lies in some
    ``P_{R/(n+1), (R+g-1-deg d)/(n+1)}(c_pi - q)``.  For each orientation the
    coset minimizer supplies the one lattice translate worth testing.
    """
    from bnrank.geometry.polytope import PolytopeMN, polytope_separate

    d = tuple(d)
    gen = genus(g)
    deg = sum(d)
    if not 0 <= deg <= gen - 1:
        raise DegreeOutOfRange(f"degree {deg} outside [0, {gen - 1}]")
    if r0 < -1:
        return False
    size = g.vertex_count
    big_r = r0 + 1
    r1 = Fraction(big_r, size)
    r2 = Fraction(big_r + gen - 1 - deg, size)
    target = project_h0(d)
    seen = set()
    for perm in permutations(range(size)):
        nu = orientation_nu(g, perm)
        if nu in seen:
            continue
        seen.add(nu)
        sol = coset_min_degplus(g.lattice, [a - b for a, b in zip(d, nu)])
        center = tuple(c - x for c, x in zip(project_h0(nu), sol.q))
        if polytope_separate(PolytopeMN(r1, r2, center), target) is None:
            return True
    return False


def rank_binary_search(g: Multigraph, d: Sequence[int]) -> RankResult:
    """Smallest ``r0`` in ``[-1, g-1]`` with ``decide_rank_at_most`` true."""
    gen = genus(g)
    lo, hi = -1, gen - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if decide_rank_at_most(g, d, mid):
            hi = mid
        else:
            lo = mid + 1
    return RankResult(lo, None, "geometric")


def check_witness(g: Multigraph, d: Sequence[int], result: RankResult) -> bool:
    w = result.witness
    if w is None:
        return True
    nu = orientation_nu(g, w.permutation)
    value = degplus([a - b + c for a, b, c in zip(d, nu, w.q)])
    return value == w.degplus == result.rank + 1 and g.lattice.contains(w.q)
