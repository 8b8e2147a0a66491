"""Small built-in graphs used by the verification suites."""

from __future__ import annotations

from typing import Dict

from bnrank.graph import Multigraph, build_multigraph


def cycle(size: int) -> Multigraph:
    return build_multigraph(size, [(i, (i + 1) % size) for i in range(size)])


def path(size: int) -> Multigraph:
    return build_multigraph(size, [(i, i + 1) for i in range(size - 1)])


def complete(size: int) -> Multigraph:
    return build_multigraph(size, [(i, j) for i in range(size) for j in range(i + 1, size)])


def banana(multiplicity: int) -> Multigraph:
    return build_multigraph(2, [(0, 1, multiplicity)])


def corpus() -> Dict[str, Multigraph]:
    """Named graphs in a fixed order."""
    return {
        "triangle": cycle(3),
        "path3": path(3),
        "cycle4": cycle(4),
        "cycle5": cycle(5),
        "k4": complete(4),
        "banana2": banana(2),
        "banana3": banana(3),
        # 4-cycle with doubled opposite edges, genus 3
        "mixed4": build_multigraph(4, [(0, 1, 2), (1, 2, 1), (2, 3, 2), (3, 0, 1)]),
    }
