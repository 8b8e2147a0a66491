"""Linear maps of H_0 and critical automorphisms of Laplacian lattices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Sequence, Tuple

from bnrank.geometry.crit import crit_classes
from bnrank.corpus import complete
from bnrank.graph import Multigraph
from bnrank.linalg import bareiss_det, rational_det, rational_inverse, transpose, vec_mat


class SingularMap(ValueError):
    pass


class HeightNotDivisor(ValueError):
    pass


class BadAlphaShape(ValueError):
    pass


@dataclass(frozen=True)
class LinearMapH0:
    """Matrix acting on column vectors of R^{n+1}, preserving H_0.

    Maps built here send the all-ones vector to zero, so only their action
    on H_0 matters.
    """

    matrix: Tuple[Tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.matrix)

    @cached_property
    def _scaled(self) -> Tuple[Tuple[Tuple[int, ...], ...], int]:
        den = lcm(*(x.denominator for row in self.matrix for x in row))
        return tuple(tuple(int(x * den) for x in row) for row in self.matrix), den

    def __call__(self, p: Sequence) -> Tuple[Fraction, ...]:
        # integer arithmetic on a common denominator, one Fraction per entry
        num, den = self._scaled
        p = [Fraction(x) for x in p]
        scale = lcm(*(x.denominator for x in p))
        ints = [int(x * scale) for x in p]
        return tuple(Fraction(sum(a * b for a, b in zip(row, ints)), den * scale) for row in num)

    @classmethod
    def from_basis_images(cls, basis: Sequence[Sequence], images: Sequence[Sequence]) -> "LinearMapH0":
        """The map with ``basis[i] -> images[i]`` (``n`` vectors of H_0) and ``1 -> 0``."""
        size = len(basis[0])
        targets = transpose([list(v) for v in images] + [[0] * size])
        inv, den = _frame_inverse(tuple(tuple(b) for b in basis))
        if all(isinstance(t, int) for row in targets for t in row):
            num = tuple(
                tuple(sum(t * inv[k][j] for k, t in enumerate(row)) for j in range(size)) for row in targets
            )
            out = cls(tuple(tuple(Fraction(x, den) for x in row) for row in num))
            out.__dict__["_scaled"] = (num, den)  # skip recomputing it from the Fractions
            return out
        else:
            matrix = [
                [sum(Fraction(t) * inv[k][j] for k, t in enumerate(row)) / den for j in range(size)]
                for row in targets
            ]
        return cls(tuple(tuple(r) for r in matrix))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence]) -> "LinearMapH0":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in matrix))

    def restricted_det(self, basis: Sequence[Sequence]) -> Fraction:
        """Determinant of the action on H_0 in coordinates of ``basis``."""
        solve = _coordinate_solver(basis)
        return rational_det([solve(self(b)) for b in basis])

    def preserves_h0(self) -> bool:
        # sum(M x) = sum_j colsum_j x_j vanishes on H_0 iff column sums agree
        return len({sum(col) for col in zip(*self.matrix)}) == 1


@lru_cache(maxsize=32)
def _frame_inverse(basis: Tuple[Tuple[int, ...], ...]) -> Tuple[Tuple[Tuple[int, ...], ...], int]:
    """Inverse of the matrix with columns ``basis[0..n-1], 1``, as ``(N, den)``."""
    size = len(basis[0])
    cols = transpose([list(b) for b in basis] + [[1] * size])
    try:
        inv = rational_inverse(cols)
    except ValueError:
        raise SingularMap("basis vectors are dependent") from None
    den = lcm(*(x.denominator for row in inv for x in row))
    return tuple(tuple(int(x * den) for x in row) for row in inv), den


def _coordinate_solver(basis: Sequence[Sequence]):
    """Function sending a point of H_0 to its coordinates in ``basis``."""
    n = len(basis)
    inv = rational_inverse([[Fraction(basis[i][j]) for i in range(n)] for j in range(n)])
    return lambda p: [sum(inv[r][k] * Fraction(p[k]) for k in range(n)) for r in range(n)]


@lru_cache(maxsize=None)
def complete_graph(size: int) -> Multigraph:
    return complete(size)


def complete_graph_automorphism(n_plus_1: int, pi: Sequence[int], h: int, alphas: Sequence[Sequence[int]]) -> LinearMapH0:
    """``b_i -> b_pi(i) + h * sum_{j<i} alphas[i][j] * b_pi(j)`` for ``i < n``.

    ``b_i`` are Laplacian rows of K_{n+1}.  ``h`` must divide ``n`` or be a
    multiple of ``n + 1``.  The result always maps the lattice onto itself
    (unitriangular change of basis).  The Crit classes have denominator
    ``n + 1`` in this basis, so the map fixes Crit / L exactly when every
    correction term lies in the lattice: ``alphas`` all zero, or ``n + 1``
    dividing ``h``.
    """
    n = n_plus_1 - 1
    if sorted(pi) != list(range(n_plus_1)):
        raise ValueError(f"{list(pi)} is not a permutation of 0..{n}")
    if h <= 0 or (n % h != 0 and h % n_plus_1 != 0):
        raise HeightNotDivisor(f"h={h} neither divides {n} nor is a multiple of {n_plus_1}")
    if len(alphas) != n or any(len(row) != n for row in alphas):
        raise BadAlphaShape(f"alphas must be {n}x{n}")
    if any(alphas[i][j] for i in range(n) for j in range(i, n)):
        raise BadAlphaShape("alphas must be strictly lower triangular")
    q = complete_graph(n_plus_1).laplacian
    images = []
    for i in range(n):
        v = list(q[pi[i]])
        for j in range(i):
            if alphas[i][j]:
                v = [a + h * alphas[i][j] * b for a, b in zip(v, q[pi[j]])]
        images.append(v)
    return LinearMapH0.from_basis_images(q[:n], images)


def verify_critical_automorphism(g: Multigraph, m: LinearMapH0) -> bool:
    """Whether ``m`` maps L_G onto itself and permutes Crit / L_G.

    The images of the lattice basis give the coefficient matrix ``A`` of
    ``m``; the lattice is preserved iff ``A`` is integral and unimodular.
    A point with coefficients ``x`` then maps to coefficients ``x A``, so
    the Crit classes are compared in coefficient space modulo 1.  All of
    it runs on integers scaled by common denominators.
    """
    lattice = g.lattice
    if m.size != g.vertex_count:
        raise ValueError("map and graph dimensions differ")
    num, den = m._scaled
    inv_num, inv_den = lattice._scaled_inverse
    n = lattice.dim
    scale = den * inv_den
    a = []
    integral = True
    for b in lattice.basis:
        image = [sum(x * y for x, y in zip(row, b)) for row in num]
        if sum(image) != 0:
            return False
        row = []
        for r in inv_num:
            c, rem = divmod(sum(x * y for x, y in zip(r, image[:n])), scale)
            integral = integral and rem == 0
            row.append(c)
        a.append(row)
    if not integral:
        if m.restricted_det(lattice.basis) == 0:
            raise SingularMap("map is singular on H_0")
        return False
    det = bareiss_det(a)
    if det == 0:
        raise SingularMap("map is singular on H_0")
    if abs(det) != 1:
        return False
    keys, modulus = _crit_keys(g)
    for x in keys:
        image = tuple(v % modulus for v in vec_mat(x, a))
        if image not in keys:
            return False
    # a unimodular map is injective on L-classes, so hitting the set is enough
    return True


@lru_cache(maxsize=None)
def _crit_keys(g: Multigraph) -> Tuple[frozenset, int]:
    """Crit class keys scaled to integers modulo their common denominator."""
    lattice = g.lattice
    fracs = [lattice.class_key(c) for c in crit_classes(g)]
    modulus = lcm(*(x.denominator for key in fracs for x in key))
    return frozenset(tuple(int(x * modulus) for x in key) for key in fracs), modulus
