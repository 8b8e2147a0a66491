"""Connected multigraphs and their Laplacian invariants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Iterable, List, Sequence, Tuple

from bnrank.linalg import bareiss_det, smith_invariants

Edge = Tuple[int, int, int]


class GraphError(ValueError):
    """Base class for invalid graph input."""


class DisconnectedGraph(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class NonPositiveMultiplicity(GraphError):
    pass


@dataclass(frozen=True)
class PicardStructure:
    invariant_factors: Tuple[int, ...]
    group_order: int


@dataclass(frozen=True)
class Multigraph:
    """Undirected connected multigraph on vertices ``0..vertex_count-1``.

    ``edges`` holds one ``(u, v, multiplicity)`` triple per vertex pair with
    ``u < v``; repeated pairs given at construction are merged.
    """

    vertex_count: int
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 2:
            raise GraphError("a graph needs at least 2 vertices")
        merged: dict = {}
        for edge in self.edges:
            u, v, m = edge if len(edge) == 3 else (*edge, 1)
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge ({u}, {v}) references a vertex outside 0..{self.vertex_count - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if m <= 0:
                raise NonPositiveMultiplicity(f"edge ({u}, {v}) has multiplicity {m}")
            key = (min(u, v), max(u, v))
            merged[key] = merged.get(key, 0) + m
        object.__setattr__(self, "edges", tuple((u, v, m) for (u, v), m in sorted(merged.items())))
        if not _connected(self.vertex_count, self.edges):
            raise DisconnectedGraph("graph is not connected")

    @property
    def n(self) -> int:
        """Index of the last vertex (the graph has ``n + 1`` vertices)."""
        return self.vertex_count - 1

    @property
    def edge_count(self) -> int:
        return sum(m for _, _, m in self.edges)

    def multiplicity(self, u: int, v: int) -> int:
        return -self.laplacian[u][v] if u != v else 0

    def degrees(self) -> Tuple[int, ...]:
        return tuple(self.laplacian[i][i] for i in range(self.vertex_count))

    @cached_property
    def laplacian(self) -> Tuple[Tuple[int, ...], ...]:
        size = self.vertex_count
        q = [[0] * size for _ in range(size)]
        for u, v, m in self.edges:
            q[u][v] -= m
            q[v][u] -= m
            q[u][u] += m
            q[v][v] += m
        return tuple(tuple(row) for row in q)

    @cached_property
    def lattice(self):
        from bnrank.lattice import LaplacianLattice

        return LaplacianLattice.from_laplacian(self.laplacian)

    def relabel(self, sigma: Sequence[int]) -> "Multigraph":
        """Graph with vertex ``v`` renamed to ``sigma[v]``."""
        return Multigraph(self.vertex_count, tuple((sigma[u], sigma[v], m) for u, v, m in self.edges))


def _connected(size: int, edges: Iterable[Edge]) -> bool:
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in edges:
        parent[find(u)] = find(v)
    return len({find(x) for x in range(size)}) == 1


def build_multigraph(vertex_count: int, edges: Iterable[Sequence[int]]) -> Multigraph:
    """Validate an edge list (pairs or triples) and build the graph."""
    return Multigraph(vertex_count, tuple(tuple(e) for e in edges))


def laplacian(g: Multigraph) -> Tuple[Tuple[int, ...], ...]:
    return g.laplacian


def genus(g: Multigraph) -> int:
    """Cyclomatic number m - (n + 1) + 1, edges counted with multiplicity."""
    return g.edge_count - g.vertex_count + 1


def canonical_divisor(g: Multigraph) -> Tuple[int, ...]:
    return tuple(d - 2 for d in g.degrees())


def reduced_laplacian(g: Multigraph, drop: int | None = None) -> List[List[int]]:
    """Laplacian with row and column ``drop`` removed (default: last vertex)."""
    drop = g.n if drop is None else drop
    keep = [i for i in range(g.vertex_count) if i != drop]
    return [[g.laplacian[i][j] for j in keep] for i in keep]


def spanning_tree_count(g: Multigraph) -> int:
    return abs(bareiss_det(reduced_laplacian(g)))


def picard_structure(g: Multigraph) -> PicardStructure:
    """Invariant factors of A_n / L_G, trivial factors dropped."""
    factors = tuple(d for d in smith_invariants(reduced_laplacian(g)) if d != 1)
    return PicardStructure(factors, prod(factors))
