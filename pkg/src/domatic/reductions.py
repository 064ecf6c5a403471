"""Structural tree operations used by the weak 2-coloring recursion.

Terminology: a leaf is a degree-1 vertex; ones(u) is the set of leaf
neighbors of u; a support vertex has at least one leaf neighbor; a
quasi-star vertex is adjacent to exactly one non-leaf vertex and at
least one leaf. All reductions return graphs with dense 0-based ids,
together with an old->new relabeling map where stated.
"""

from __future__ import annotations

from .graph import Graph, is_tree


def ones(g: Graph, u: int) -> frozenset[int]:
    """Leaf neighbors of u: { v in N(u) : deg(v) = 1 }."""
    if not (0 <= u < g.n):
        raise ValueError(f"vertex {u} out of range (n={g.n})")
    return frozenset(v for v in g.adj[u] if len(g.adj[v]) == 1)


def support_vertices(g: Graph) -> frozenset[int]:
    """Vertices with at least one leaf neighbor."""
    is_leaf = [len(g.adj[v]) == 1 for v in range(g.n)]
    return frozenset(
        u for u in range(g.n) if any(is_leaf[v] for v in g.adj[u])
    )


def quasi_star_vertices(t: Graph) -> frozenset[int]:
    """Tree vertices adjacent to exactly one non-leaf and at least one leaf."""
    if not is_tree(t):
        raise ValueError("quasi_star_vertices requires a tree")
    is_leaf = [len(t.adj[v]) == 1 for v in range(t.n)]
    out = set()
    for u in range(t.n):
        leaf_nbrs = sum(1 for v in t.adj[u] if is_leaf[v])
        non_leaf_nbrs = len(t.adj[u]) - leaf_nbrs
        if non_leaf_nbrs == 1 and leaf_nbrs >= 1:
            out.add(u)
    return frozenset(out)


def _delete_vertices(g: Graph, dead: frozenset[int]) -> tuple[Graph, dict[int, int]]:
    # Survivors keep their relative order; returns the old->new map.
    relabel: dict[int, int] = {}
    for v in range(g.n):
        if v not in dead:
            relabel[v] = len(relabel)
    adj = [
        {relabel[w] for w in g.adj[old] if w not in dead}
        for old in relabel
    ]
    return Graph.from_adjacency(adj), relabel


def _ones_of(t: Graph, y: int) -> frozenset[int]:
    if not (0 <= y < t.n):
        raise ValueError(f"vertex {y} out of range (n={t.n})")
    leaves = frozenset(v for v in t.adj[y] if len(t.adj[v]) == 1)
    if not leaves:
        raise ValueError(f"vertex {y} is not a support vertex")
    return leaves


def reduce_minus1(t: Graph, y: int) -> tuple[Graph, dict[int, int]]:
    """Delete ones(y) from tree t; y must be a support vertex."""
    if not is_tree(t):
        raise ValueError("reduce_minus1 requires a tree")
    return _delete_vertices(t, _ones_of(t, y))


def bouquet(g: Graph, ws: frozenset[int] | set[int]) -> tuple[Graph, dict[int, int]]:
    """Identify the pairwise non-adjacent vertices ws into a single vertex.

    The merged vertex inherits the union of the old neighborhoods with
    duplicates collapsed, keeping the graph simple. In the relabeling
    map every vertex of ws points at the merged vertex's new id.
    """
    ws = frozenset(ws)
    if not ws:
        raise ValueError("bouquet needs at least one vertex")
    for w in ws:
        if not (0 <= w < g.n):
            raise ValueError(f"vertex {w} out of range (n={g.n})")
        if g.adj[w] & ws:
            raise ValueError("bouquet vertices must be pairwise non-adjacent")
    anchor = min(ws)
    relabel: dict[int, int] = {}
    for v in range(g.n):
        if v == anchor or v not in ws:
            relabel[v] = len(relabel)
    merged_new = relabel[anchor]
    for w in ws:
        relabel[w] = merged_new
    adj: list[set[int]] = [set() for _ in range(g.n - len(ws) + 1)]
    for old in range(g.n):
        bucket = adj[relabel[old]]
        for w in g.adj[old]:
            bucket.add(relabel[w])
    return Graph.from_adjacency(adj), relabel


def reduce_bouquet_minus2(t: Graph, y: int) -> Graph | None:
    """Bouquet the non-leaf neighbors of y, then delete y and ones(y).

    Returns None when y has no non-leaf neighbor (t is a star centered
    at y), which callers treat as a base case.
    """
    if not is_tree(t):
        raise ValueError("reduce_bouquet_minus2 requires a tree")
    leaves = _ones_of(t, y)
    internal = t.adj[y] - leaves
    if not internal:
        return None
    merged, relabel = bouquet(t, internal)
    dead = frozenset(relabel[v] for v in leaves) | {relabel[y]}
    reduced, _ = _delete_vertices(merged, dead)
    return reduced
