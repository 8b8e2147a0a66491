"""Corpus-wide verification suites behind ``bnrank verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Tuple

from bnrank.corpus import corpus
from bnrank.graph import Multigraph, canonical_divisor, genus
from bnrank.rank import check_witness, rank, rank_bruteforce, rank_geometric

SUITES = ("rr", "duality", "oracle")


@dataclass(frozen=True)
class SuiteReport:
    name: str
    checked: int
    failures: int
    extra: Tuple[Tuple[str, object], ...] = field(default=())
    failed_cases: Tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.failures == 0


def divisors_in_box(size: int, lo: int, hi: int, deg_lo: int, deg_hi: int) -> Iterator[Tuple[int, ...]]:
    """Divisors with entries in ``[lo, hi]`` and degree in ``[deg_lo, deg_hi]``."""
    for d in product(range(lo, hi + 1), repeat=size):
        if deg_lo <= sum(d) <= deg_hi:
            yield d


def relabelled_corpus(seed: int | None) -> Dict[str, Multigraph]:
    """The corpus, each graph relabelled by a seeded vertex permutation.

    ``seed=None`` keeps the original labels.  Every suite property is
    invariant under relabelling, so the seed only varies the instances.
    """
    graphs = corpus()
    if seed is None:
        return graphs
    rng = random.Random(seed)
    out = {}
    for name, g in graphs.items():
        sigma = list(range(g.vertex_count))
        rng.shuffle(sigma)
        out[name] = g.relabel(sigma)
    return out


def rr_suite(seed: int | None = None, lo: int = -3, hi: int = 4) -> SuiteReport:
    """``r(D) - r(K - D) == deg(D) - (g - 1)`` for ``-1 <= deg D <= 2g - 1``."""
    checked = failures = 0
    bad: List[str] = []
    for name, g in relabelled_corpus(seed).items():
        gen = genus(g)
        k = canonical_divisor(g)
        for d in divisors_in_box(g.vertex_count, lo, hi, -1, 2 * gen - 1):
            dual = tuple(a - b for a, b in zip(k, d))
            checked += 1
            if rank(g, d).rank - rank(g, dual).rank != sum(d) - (gen - 1):
                failures += 1
                bad.append(f"{name} {d}")
    return SuiteReport("rr", checked, failures, failed_cases=tuple(bad))


def oracle_suite(seed: int | None = None, lo: int = -2, hi: int = 3) -> SuiteReport:
    """Geometric and brute-force ranks agree for ``0 <= deg D <= g - 1``; witnesses check out."""
    checked = failures = 0
    bad: List[str] = []
    for name, g in relabelled_corpus(seed).items():
        gen = genus(g)
        for d in divisors_in_box(g.vertex_count, lo, hi, 0, gen - 1):
            checked += 1
            geo = rank_geometric(g, d)
            if geo.rank != rank_bruteforce(g, d).rank or not check_witness(g, d, geo):
                failures += 1
                bad.append(f"{name} {d}")
    return SuiteReport("oracle", checked, failures, failed_cases=tuple(bad))


def duality_suite(seed: int = 0, samples: int = 1000) -> SuiteReport:
    """Tiling at ``t`` in ``{Cov/4, Cov/2, 3Cov/4}`` on every corpus graph."""
    from bnrank.geometry.crit import covering_radius
    from bnrank.geometry.duality import classify, tiling_profile

    checked = violations = boundary = 0
    bad: List[str] = []
    for name, g in corpus().items():
        cov = covering_radius(g)
        profiles = tiling_profile(g, samples, seed)
        for frac in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            report = classify(profiles, cov * frac, cov)
            checked += report.checked
            violations += report.violations
            boundary += report.boundary
            if report.violations:
                bad.append(f"{name} t={report.t}")
    return SuiteReport("duality", checked, violations, (("violations", violations), ("boundary", boundary)), tuple(bad))


def run_suite(name: str, seed: int | None = None) -> SuiteReport:
    if name == "rr":
        return rr_suite(seed)
    if name == "oracle":
        return oracle_suite(seed)
    if name == "duality":
        return duality_suite(0 if seed is None else seed)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
