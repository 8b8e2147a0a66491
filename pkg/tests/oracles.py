"""Slow, independent reference implementations used only by the tests.

None of these touch the package's elimination, burning or search code:
they enumerate, expand determinants by permutations, or solve with plain
Fraction Gaussian elimination written here.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product
from math import gcd, prod


def expand_edges(g):
    return [(u, v) for u, v, m in g.edges for _ in range(m)]


def spanning_trees_bruteforce(g) -> int:
    """Count n-edge subsets (parallel edges distinct) that connect every vertex."""
    size = g.vertex_count
    count = 0
    for subset in combinations(expand_edges(g), size - 1):
        parent = list(range(size))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for u, v in subset:
            a, b = find(u), find(v)
            if a == b:
                ok = False
                break
            parent[a] = b
        count += ok
    return count


def leibniz_det(m) -> int:
    size = len(m)
    total = 0
    for perm in permutations(range(size)):
        inversions = sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
        total += (-1) ** inversions * prod(m[i][perm[i]] for i in range(size))
    return total


def snf_by_minors(m):
    """Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors."""
    rows, cols = len(m), len(m[0])
    out = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, leibniz_det([[m[r][c] for c in cs] for r in rs]))
        if g == 0:
            out.extend([0] * (min(rows, cols) - k + 1))
            break
        out.append(g // prev)
        prev = g
    return out


def laplacian_from_edges(size, edges):
    q = [[0] * size for _ in range(size)]
    for u, v, m in edges:
        q[u][v] -= m
        q[v][u] -= m
        q[u][u] += m
        q[v][v] += m
    return q


def solve(a, b):
    """Fraction solution of the square system a x = b."""
    n = len(a)
    rows = [[Fraction(x) for x in a[i]] + [Fraction(b[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col] / rows[col][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[i][n] / rows[i][i] for i in range(n)]


class ClassOracle:
    """Divisor classes from a direct rational solve of the reduced Laplacian."""

    def __init__(self, g):
        self.size = g.vertex_count
        q = laplacian_from_edges(g.vertex_count, g.edges)
        self.reduced = [row[:-1] for row in q[:-1]]
        self._effective = {}

    def key(self, d):
        x = solve(self.reduced, list(d[:-1]))
        return tuple(c - (c.numerator // c.denominator) for c in x)

    def equivalent(self, a, b):
        return sum(a) == sum(b) and self.key([x - y for x, y in zip(a, b)]) == (0,) * (self.size - 1)

    def effective_keys(self, k):
        if k not in self._effective:
            keys = set()
            for picks in combinations_with_replacement(range(self.size), k):
                e = [0] * self.size
                for v in picks:
                    e[v] += 1
                keys.add(self.key(e))
            self._effective[k] = keys
        return self._effective[k]

    def effective(self, d):
        return sum(d) >= 0 and self.key(d) in self.effective_keys(sum(d))

    def rank(self, d):
        if not self.effective(d):
            return -1
        k = 0
        while True:
            k += 1
            for picks in combinations_with_replacement(range(self.size), k):
                e = [0] * self.size
                for v in picks:
                    e[v] += 1
                if not self.effective([a - b for a, b in zip(d, e)]):
                    return k - 1


def lattice_points(basis, radius):
    """``basis^T x`` for every integer ``x`` in ``[-radius, radius]^n``."""
    for x in product(range(-radius, radius + 1), repeat=len(basis)):
        yield tuple(sum(c * row[j] for c, row in zip(x, basis)) for j in range(len(basis[0])))


def coset_min_box(basis, w, radius, objective):
    return min(objective([a + b for a, b in zip(w, q)]) for q in lattice_points(basis, radius))


def degplus(v):
    return sum(x for x in v if x > 0)


def naive_h(basis, p, radius):
    """``min_q max(p - q)`` over lattice points with coefficients in the box."""
    return min(max(Fraction(a) - b for a, b in zip(p, q)) for q in lattice_points(basis, radius))


def orientation_nu(g, perm):
    pos = {v: i for i, v in enumerate(perm)}
    nu = [-1] * g.vertex_count
    for u, v in expand_edges(g):
        nu[v if pos[u] < pos[v] else u] += 1
    return nu
