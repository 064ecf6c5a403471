"""Undirected simple graphs: representation, parsing, and generators.

Vertices are dense 0-based integers. Graphs are immutable after
construction and every constructor validates symmetry and simplicity,
so downstream code may assume a well-formed adjacency structure.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Raised for malformed edge-list input; message names the line."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    n: int
    adj: tuple[frozenset[int], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an explicit vertex count and edge pairs.

        Rejects out-of-range endpoints, self-loops, and duplicate edges
        (in either orientation).
        """
        if n < 1:
            raise ValueError(f"graph must have at least one vertex, got n={n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in sets[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            sets[u].add(v)
            sets[v].add(u)
        return cls(n, tuple(frozenset(s) for s in sets))

    @classmethod
    def from_adjacency(cls, adj: Sequence[set[int]] | Sequence[frozenset[int]]) -> "Graph":
        """Build a graph from per-vertex neighbor sets, validating them."""
        n = len(adj)
        if n < 1:
            raise ValueError("graph must have at least one vertex")
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if not (0 <= v < n):
                    raise ValueError(f"neighbor {v} of vertex {u} out of range for n={n}")
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if u not in adj[v]:
                    raise ValueError(f"asymmetric adjacency: {u} -> {v} but not {v} -> {u}")
        return cls(n, tuple(frozenset(s) for s in adj))

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(map(len, self.adj)) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: header line "n m", then m lines "u v".

    Lines starting with '#' are comments; blank lines are skipped.
    Vertices are 0-based. Errors name the offending 1-based line number.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {line!r}") from None
        if header is None:
            if a < 1:
                raise ParseError(f"line {lineno}: vertex count must be at least 1, got {a}")
            if b < 0:
                raise ParseError(f"line {lineno}: edge count must be nonnegative, got {b}")
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise ParseError(f"line {lineno}: more than the declared {m} edges")
        if not (0 <= a < n) or not (0 <= b < n):
            bad = a if not (0 <= a < n) else b
            raise ParseError(f"line {lineno}: vertex {bad} out of range (n={n})")
        if a == b:
            raise ParseError(f"line {lineno}: self-loop at vertex {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge ({a}, {b})")
        seen.add(key)
        edges.append((a, b))
    if header is None:
        raise ParseError("line 1: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"expected {m} edges, got {len(edges)}")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    """Serialize a graph to the edge-list format (deterministic order)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def gen_path(n: int) -> Graph:
    """Path on n vertices: edges {i, i+1}."""
    if n < 1:
        raise ValueError(f"path order must be positive, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def gen_star(r: int) -> Graph:
    """Star with center 0 and r leaves 1..r."""
    if r < 1:
        raise ValueError(f"star must have at least one leaf, got r={r}")
    return Graph.from_edges(r + 1, ((0, i) for i in range(1, r + 1)))


def gen_complete(n: int) -> Graph:
    """Complete graph on n vertices."""
    if n < 1:
        raise ValueError(f"complete graph order must be positive, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def gen_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def corona(g: Graph, r: int) -> Graph:
    """Attach r new pendant leaves to every vertex of g.

    Original vertices keep their ids 0..n-1; the r leaves of vertex v get
    ids n + v*r .. n + v*r + r - 1.
    """
    if r < 1:
        raise ValueError(f"corona needs at least one leaf per vertex, got r={r}")
    n = g.n
    edges = list(g.edges())
    for v in range(n):
        for j in range(r):
            edges.append((v, n + v * r + j))
    return Graph.from_edges(n * (1 + r), edges)


def tree_from_pruefer(seq: Sequence[int], n: int) -> Graph:
    """Decode a Pruefer sequence of length n-2 into the labeled tree on n vertices."""
    if n < 2:
        raise ValueError(f"Pruefer decoding needs n >= 2, got {n}")
    if len(seq) != n - 2:
        raise ValueError(f"sequence length {len(seq)} does not match n={n}")
    degree = [1] * n
    for x in seq:
        if not (0 <= x < n):
            raise ValueError(f"sequence entry {x} out of range for n={n}")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n vertices (deterministic per seed)."""
    if n < 1:
        raise ValueError(f"tree order must be positive, got {n}")
    if n == 1:
        return Graph.from_edges(1, [])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_pruefer(seq, n)


def gen_caterpillar(n: int, seed: int = 0) -> Graph:
    """Caterpillar on n vertices: a spine path plus leaves hung off it.

    The spine has ceil(n/2) vertices; the remaining vertices are attached
    to spine positions drawn from a seeded PRNG.
    """
    if n < 1:
        raise ValueError(f"caterpillar order must be positive, got {n}")
    spine = (n + 1) // 2
    edges = [(i, i + 1) for i in range(spine - 1)]
    rng = random.Random(seed)
    for v in range(spine, n):
        edges.append((rng.randrange(spine), v))
    return Graph.from_edges(n, edges)


def min_degree(g: Graph) -> int:
    """Minimum vertex degree."""
    return min(len(s) for s in g.adj)


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0."""
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == g.n


def is_tree(g: Graph) -> bool:
    """True when g is connected with exactly n - 1 edges."""
    return g.m == g.n - 1 and is_connected(g)
