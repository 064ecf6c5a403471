"""Fast exact weak 2-coloring counts for trees.

The engine rests on the support-vertex recursion: pick a support vertex
y, then

    w2(T) = w2(T minus ones(y)) + w2(T' minus y and ones(y)),

where T' is T with the non-leaf neighbors of y merged into one vertex.
Base cases: a single vertex has no weak 2-coloring, a star has exactly
one. Results are memoized on canonical tree codes; without sharing, the
two subproblems overlap so heavily (paths degenerate to Fibonacci-sized
call trees) that the naked recursion is exponential.

The inner loop works on plain adjacency lists and exploits that the
input is a tree: leaves of y touch nothing but y, and non-leaf neighbors
of y are pairwise non-adjacent, so both reductions are single relabeling
passes. The general-graph constructions live in `reductions` and the
test suite pins the two implementations to each other.

The memo table maps canonical codes to counts. Entries are write-once:
sharing a table across threads only needs per-entry atomicity, since a
recomputed entry always carries the same value.
"""

from __future__ import annotations

from typing import Callable, MutableMapping, Optional, Sequence

from .canon import TreeCode, _canon_tree
from .graph import Graph, is_tree
from .polynomial import DomaticPolynomial

MemoTable = MutableMapping[TreeCode, int]

_Lists = list  # adjacency as list of neighbor lists

SupportChoice = Callable[[Sequence[Sequence[int]]], int]


def _default_choice(adj: _Lists, deg: list[int], pos: list[int]) -> int:
    # Quasi-star vertices (exactly one non-leaf neighbor) first, then the
    # most leaf neighbors, ties to the smallest canonical position. Any
    # support vertex is valid; canonical tie-breaking makes the sibling
    # subproblems of nearby reductions pick the same spot, so their own
    # children coincide and the memo table stays small.
    n = len(adj)
    cnt = [0] * n
    for v in range(n):
        if deg[v] == 1:
            cnt[adj[v][0]] += 1
    best: Optional[tuple[int, int, int]] = None
    y = -1
    for u in range(n):
        c = cnt[u]
        if c:
            key = (0 if deg[u] - c == 1 else 1, -c, pos[u])
            if best is None or key < best:
                best = key
                y = u
    if y < 0:
        raise ValueError("no support vertex: not a tree with n >= 2")
    return y


def default_support_choice(adj: Sequence[Sequence[int]]) -> int:
    """Support vertex the engine reduces at, given neighbor lists or sets."""
    lists = [list(nbrs) for nbrs in adj]
    _, pos = _canon_tree(lists)
    return _default_choice(lists, [len(x) for x in lists], pos)


def _minus1(adj: _Lists, y: int, leaf_set: set[int]) -> _Lists:
    # Drop the leaves hanging off y. They touch nothing else, so only
    # y's own neighbor list changes beyond relabeling.
    n = len(adj)
    relabel = [-1] * n
    k = 0
    for v in range(n):
        if v not in leaf_set:
            relabel[v] = k
            k += 1
    out = []
    for v in range(n):
        if relabel[v] < 0:
            continue
        if v == y:
            out.append([relabel[x] for x in adj[v] if x not in leaf_set])
        else:
            out.append([relabel[x] for x in adj[v]])
    return out


def _minus2(adj: _Lists, y: int, leaf_set: set[int], internal: list[int]) -> _Lists:
    # Merge the non-leaf neighbors of y, then drop y and its leaves. In a
    # tree the merged vertices only share the neighbor y, so no dedup is
    # needed; the merged vertex takes the slot of the smallest of them.
    n = len(adj)
    internal_set = set(internal)
    anchor = min(internal)
    relabel = [-1] * n
    merged = -1
    k = 0
    for v in range(n):
        if v == y or v in leaf_set:
            continue
        if v in internal_set:
            if v == anchor:
                merged = k
                relabel[v] = k
                k += 1
            continue
        relabel[v] = k
        k += 1
    for w in internal_set:
        relabel[w] = merged
    out: _Lists = [[] for _ in range(k)]
    merged_list = out[merged]
    for v in range(n):
        if v == y or v in leaf_set:
            continue
        if v in internal_set:
            for x in adj[v]:
                if x != y:
                    merged_list.append(relabel[x])
        else:
            out[relabel[v]] = [relabel[x] for x in adj[v]]
    return out


def w2_tree(
    t: Graph,
    memo: Optional[MemoTable] = None,
    choose: Optional[SupportChoice] = None,
) -> int:
    """Exact weak 2-coloring count of a tree.

    Equals the number of two-block domatic partitions. `memo` may be
    shared across calls to reuse subtree results; a fresh table is used
    when omitted. `choose` overrides the support-vertex selection (it
    receives the current adjacency lists) and only affects speed, never
    the result.
    """
    if not is_tree(t):
        raise ValueError("w2_tree requires a tree")
    if memo is None:
        memo = {}
    adj0 = [list(s) for s in t.adj]
    root_code, root_pos = _canon_tree(adj0)
    # Explicit stack instead of recursion: reduction chains can be ~n deep.
    stack: list[list] = [[adj0, root_code, root_pos, None]]
    while stack:
        frame = stack[-1]
        adj, code, pos, children = frame
        if code in memo:
            stack.pop()
            continue
        if children is not None:
            memo[code] = memo[children[0]] + memo[children[1]]
            stack.pop()
            continue
        n = len(adj)
        if n == 1:
            memo[code] = 0
            stack.pop()
            continue
        deg = [len(x) for x in adj]
        if max(deg) == n - 1:  # star; covers K2
            memo[code] = 1
            stack.pop()
            continue
        y = _default_choice(adj, deg, pos) if choose is None else choose(adj)
        leaves = [x for x in adj[y] if deg[x] == 1]
        if not leaves:
            raise ValueError(f"chosen vertex {y} is not a support vertex")
        internal = [x for x in adj[y] if deg[x] > 1]
        leaf_set = set(leaves)
        child1 = _minus1(adj, y, leaf_set)
        child2 = _minus2(adj, y, leaf_set, internal)
        code1, pos1 = _canon_tree(child1)
        code2, pos2 = _canon_tree(child2)
        frame[3] = (code1, code2)
        if code2 not in memo:
            stack.append([child2, code2, pos2, None])
        if code1 not in memo:
            stack.append([child1, code1, pos1, None])
    return memo[root_code]


def w2_path_closed(n: int) -> int:
    """Weak 2-coloring count of the path on n >= 2 vertices.

    Iterates w2(P_n) = w2(P_{n-1}) + w2(P_{n-2}) from w2(P_2) = w2(P_3) = 1,
    so the values run along the Fibonacci numbers.
    """
    if n < 2:
        raise ValueError(f"path closed form needs n >= 2, got {n}")
    a, b = 1, 1
    for _ in range(n - 3):
        a, b = b, a + b
    return b


def w2_corona_closed(n: int) -> int:
    """Weak 2-coloring count of any corona over a base graph of order n.

    Pendant leaves force their base vertex's color, so every one of the
    2^n base colorings works; halving for the color swap leaves 2^(n-1).
    The leaf multiplicity r does not enter.
    """
    if n < 1:
        raise ValueError(f"base order must be positive, got {n}")
    return 1 << (n - 1)


def dp_tree_polynomial(t: Graph, memo: Optional[MemoTable] = None) -> DomaticPolynomial:
    """Domatic polynomial of a tree: x + w2(T) x^2 (just x for a single vertex)."""
    if not is_tree(t):
        raise ValueError("dp_tree_polynomial requires a tree")
    coeffs = {1: 1}
    w2 = w2_tree(t, memo)
    if w2:
        coeffs[2] = w2
    return DomaticPolynomial(coeffs)
