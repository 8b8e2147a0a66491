"""Baker-Norine rank of divisors on finite multigraphs."""

from bnrank.divisor import (
    is_effective_class,
    linearly_equivalent,
    reduced_divisor,
    verify_certificate,
)
from bnrank.graph import (
    Multigraph,
    build_multigraph,
    canonical_divisor,
    genus,
    laplacian,
    picard_structure,
    spanning_tree_count,
)
from bnrank.ilp import coset_min_degplus, degplus_lower_bound
from bnrank.rank import RankResult, decide_rank_at_most, rank, rank_bruteforce, rank_geometric

__version__ = "0.1.0"

__all__ = [
    "Multigraph",
    "RankResult",
    "build_multigraph",
    "canonical_divisor",
    "coset_min_degplus",
    "decide_rank_at_most",
    "degplus_lower_bound",
    "genus",
    "is_effective_class",
    "laplacian",
    "linearly_equivalent",
    "picard_structure",
    "rank",
    "rank_bruteforce",
    "rank_geometric",
    "reduced_divisor",
    "spanning_tree_count",
    "verify_certificate",
]
