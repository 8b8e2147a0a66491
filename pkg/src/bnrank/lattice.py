"""The Laplacian lattice L_G inside the root lattice A_n."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import floor, lcm
from typing import Sequence, Tuple

from bnrank.linalg import hermite_rows, rational_inverse, vec_mat


@dataclass(frozen=True)
class LaplacianLattice:
    """Row lattice of a Laplacian ``Q`` on ``n + 1`` vertices.

    ``basis`` is rows ``0..n-1`` of ``Q`` (any ``n`` rows of a connected
    graph's Laplacian are independent).  Because ``Q`` is symmetric, the
    first ``n`` coordinates of ``basis^T x`` are ``Q~ x`` with ``Q~`` the
    reduced Laplacian, so ``x = Q~^{-1} q[:n]`` recovers coefficients.
    ``echelon`` spans the same lattice with row ``i`` zero before column
    ``i``; the coset search walks coordinates in that order.
    """

    laplacian: Tuple[Tuple[int, ...], ...]
    basis: Tuple[Tuple[int, ...], ...]
    inverse: Tuple[Tuple[Fraction, ...], ...]
    echelon: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_laplacian(cls, q: Sequence[Sequence[int]]) -> "LaplacianLattice":
        size = len(q)
        n = size - 1
        basis = tuple(tuple(row) for row in q[:n])
        inv = rational_inverse([row[:n] for row in basis])
        echelon = hermite_rows(basis)
        return cls(
            tuple(tuple(row) for row in q),
            basis,
            tuple(tuple(r) for r in inv),
            tuple(tuple(r) for r in echelon),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def point(self, x: Sequence[int]) -> Tuple[int, ...]:
        """Lattice point ``basis^T x``."""
        return tuple(vec_mat(x, self.basis))

    @cached_property
    def _scaled_inverse(self) -> Tuple[Tuple[Tuple[int, ...], ...], int]:
        """``(N, den)`` with ``inverse == N / den`` and ``N`` integral."""
        den = lcm(*(c.denominator for row in self.inverse for c in row))
        return tuple(tuple(int(c * den) for c in row) for row in self.inverse), den

    def coefficients(self, v: Sequence) -> Tuple[Fraction, ...]:
        """Rational coefficients of ``v`` (assumed in H_0) in ``basis``."""
        n = self.dim
        num, den = self._scaled_inverse
        return tuple(Fraction(sum(a * b for a, b in zip(row, v[:n])), den) for row in num)

    def integer_coefficients(self, v: Sequence[int]) -> Tuple[int, ...] | None:
        """Integer ``x`` with ``basis^T x == v``, or ``None`` if ``v`` is not in the lattice."""
        if len(v) != self.dim + 1 or sum(v) != 0:
            return None
        num, den = self._scaled_inverse
        out = []
        for row in num:
            t, r = divmod(sum(a * b for a, b in zip(row, v)), den)
            if r:
                return None
            out.append(t)
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        if any(Fraction(c).denominator != 1 for c in v):
            return False
        return self.integer_coefficients([int(c) for c in v]) is not None

    def class_key(self, p: Sequence) -> Tuple[Fraction, ...]:
        """Canonical key of ``p + L`` for a rational point ``p`` of H_0."""
        return tuple(c - floor(c) for c in self.coefficients(p))

    def same_class(self, p: Sequence, r: Sequence) -> bool:
        return self.class_key(p) == self.class_key(r)
