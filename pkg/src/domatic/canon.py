"""Isomorphism-invariant canonical codes for trees.

A tree's code is an AHU-style parenthesis string of the tree rooted at
its center; a bicentral tree takes the lexicographically smaller of the
two rooted codes. Equal codes <=> isomorphic trees, which makes the
code a safe memoization key.

Unary chains are run-length encoded: a vertex's code is the length of
the plain chain below it followed by the code of the first branching
point ("3()" is a path of three edges ending in a leaf). This keeps
code construction effectively linear on path-like trees, where naive
nested parentheses cost a pass per level.

The working representation is a plain adjacency list (list of neighbor
lists); the Graph-facing entry points convert and delegate.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, is_tree

TreeCode = bytes

Adjacency = Sequence[Sequence[int]]


def _centers(adj: Adjacency) -> list[int]:
    n = len(adj)
    if n == 1:
        return [0]
    deg = [len(nbrs) for nbrs in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt: list[int] = []
        for u in layer:
            for v in adj[u]:
                if deg[v] > 1:
                    deg[v] -= 1
                    if deg[v] == 1:
                        nxt.append(v)
        layer = nxt
    return sorted(layer)


def _rooted_codes(adj: Adjacency, root: int) -> tuple[list[bytes], list[list[int]]]:
    """Per-vertex subtree codes for the tree rooted at `root`.

    Returns (codes, children). A vertex's code is chain-length digits
    followed by "(" + sorted child codes + ")" at the branching point;
    equal codes <=> isomorphic rooted subtrees.
    """
    n = len(adj)
    parent = [-1] * n
    order = [root]
    parent[root] = root
    for u in order:
        for v in adj[u]:
            if parent[v] == -1:
                parent[v] = u
                order.append(v)
    parent[root] = -1
    children: list[list[int]] = [[] for _ in range(n)]
    for u in order[1:]:
        children[parent[u]].append(u)

    chain = [0] * n  # unary edges between a vertex and its branching core
    core = [b""] * n
    full = [b""] * n
    for u in reversed(order):
        cs = children[u]
        if not cs:
            core[u] = b"()"
        elif len(cs) == 1:
            c = cs[0]
            chain[u] = chain[c] + 1
            core[u] = core[c]
        else:
            core[u] = b"(" + b"".join(sorted(full[c] for c in cs)) + b")"
        full[u] = b"%d" % chain[u] + core[u]
    return full, children


def _preorder_positions(
    root: int, full: list[bytes], children: list[list[int]]
) -> list[int]:
    # Canonical preorder: children visited in code order. Position ties
    # across isomorphic copies are then resolved identically, which is
    # what the counting engine's vertex selection needs.
    pos = [0] * len(full)
    stack = [root]
    count = 0
    while stack:
        u = stack.pop()
        pos[u] = count
        count += 1
        cs = children[u]
        if len(cs) > 1:
            cs = sorted(cs, key=full.__getitem__, reverse=True)
            stack.extend(cs)
        else:
            stack.extend(cs)
    return pos


def _canon_tree(adj: Adjacency) -> tuple[TreeCode, list[int]]:
    """Canonical code plus canonical preorder positions (trusts tree input)."""
    centers = _centers(adj)
    root = centers[0]
    full, children = _rooted_codes(adj, root)
    code = full[root]
    if len(centers) == 2:
        full2, children2 = _rooted_codes(adj, centers[1])
        if full2[centers[1]] < code:
            root, full, children = centers[1], full2, children2
            code = full2[root]
    return code, _preorder_positions(root, full, children)


def _code_of_adjacency(adj: Adjacency) -> TreeCode:
    centers = _centers(adj)
    full, _ = _rooted_codes(adj, centers[0])
    code = full[centers[0]]
    if len(centers) == 2:
        full2, _ = _rooted_codes(adj, centers[1])
        code2 = full2[centers[1]]
        if code2 < code:
            return code2
    return code


def tree_centers(t: Graph) -> list[int]:
    """Center vertex (or the two centers) of a tree, by leaf peeling."""
    return _centers(t.adj)


def canonical_code(t: Graph) -> TreeCode:
    """Canonical byte string of an unrooted tree (equal iff isomorphic)."""
    if not is_tree(t):
        raise ValueError("canonical_code requires a tree")
    return _code_of_adjacency([list(s) for s in t.adj])
