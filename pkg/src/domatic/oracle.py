"""Exhaustive ground-truth engine for domatic counting.

Everything here works on any simple graph (connected or not) but scales
exponentially, so it is meant for small orders (n up to ~14). Vertex
sets are handled as bitmasks; a set S dominates iff the union of closed
neighborhoods over S covers all vertices.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .graph import Graph, min_degree
from .polynomial import DomaticPolynomial


def _closed_masks(g: Graph) -> list[int]:
    masks = []
    for v in range(g.n):
        m = 1 << v
        for w in g.adj[v]:
            m |= 1 << w
        masks.append(m)
    return masks


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex is in s or has a neighbor in s."""
    closed = _closed_masks(g)
    covered = 0
    for v in s:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range (n={g.n})")
        covered |= closed[v]
    return covered == (1 << g.n) - 1


def minimum_dominating_set(g: Graph) -> frozenset[int]:
    """A minimum dominating set, found by subset search in increasing size."""
    closed = _closed_masks(g)
    full = (1 << g.n) - 1
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            covered = 0
            for v in combo:
                covered |= closed[v]
            if covered == full:
                return frozenset(combo)
    raise AssertionError("unreachable: V itself dominates")


def gamma(g: Graph) -> int:
    """Domination number: size of a minimum dominating set."""
    return len(minimum_dominating_set(g))


def _count_partitions(g: Graph, blocks: int, stop_at_first: bool = False) -> int:
    """Count unordered partitions of V into `blocks` dominating blocks.

    Enumerates restricted-growth assignments (vertex 0 opens block 0,
    block j+1 is opened only after block j), which counts each unlabeled
    partition exactly once. A branch is pruned as soon as some block can
    no longer be completed to a dominating set even if it received every
    unassigned vertex.
    """
    n = g.n
    closed = _closed_masks(g)
    full = (1 << n) - 1
    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | closed[v]

    def rec(v: int, masks: list[int]) -> int:
        used = len(masks)
        if used + (n - v) < blocks:
            return 0
        rest = suffix[v]
        for m in masks:
            if m | rest != full:
                return 0
        if v == n:
            return 1 if used == blocks else 0
        total = 0
        cm = closed[v]
        for b in range(used):
            old = masks[b]
            masks[b] = old | cm
            total += rec(v + 1, masks)
            masks[b] = old
            if stop_at_first and total:
                return total
        if used < blocks:
            masks.append(cm)
            total += rec(v + 1, masks)
            masks.pop()
        return total

    return rec(0, [])


def dp_count(g: Graph, i: int) -> int:
    """Number of domatic partitions of g with exactly i blocks."""
    if i < 1 or i > g.n:
        raise ValueError(f"block count {i} out of range [1, {g.n}]")
    return _count_partitions(g, i)


def w2_oracle(g: Graph) -> int:
    """Weak 2-coloring count dp(g, 2); zero for a single vertex."""
    if g.n < 2:
        return 0
    return dp_count(g, 2)


def domatic_number(g: Graph) -> int:
    """Largest i admitting a domatic partition into i blocks.

    Searches downward from the minimum-degree bound delta + 1; the
    single-block partition always exists, so the search terminates.
    """
    for i in range(min(min_degree(g) + 1, g.n), 0, -1):
        if _count_partitions(g, i, stop_at_first=True):
            return i
    raise AssertionError("unreachable: {V} is a domatic partition")


def domatic_polynomial_oracle(g: Graph) -> DomaticPolynomial:
    """Exhaustively built domatic polynomial, coefficients for i = 1..delta+1."""
    top = min(min_degree(g) + 1, g.n)
    return DomaticPolynomial({i: dp_count(g, i) for i in range(1, top + 1)})
