"""Exhaustive generation of non-isomorphic trees.

Rooted trees on n vertices are generated as level sequences in
reverse-lexicographic order; free trees are obtained by canonizing each
rooted tree at its center(s) and discarding repeats.  The level-sequence
successor rule is constant-time amortized, so enumeration up to n = 16
stays cheap.
"""

from __future__ import annotations

from collections.abc import Iterator

from .graphs import Graph

MAX_TREE_ORDER = 16


def rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """Yield the level sequences of all rooted trees on n vertices.

    A level sequence lists vertex depths (root = 1) in preorder.  The
    first sequence is the path [1, 2, ..., n]; each successor is formed
    by finding the last entry p with L[p] > 2 and repeating the block
    that starts at the last earlier position q with L[q] == L[p] - 1.
    The star [1, 2, 2, ..., 2] is last.
    """
    if n < 1:
        return
    if n == 1:
        yield [1]
        return
    seq = list(range(1, n + 1))
    while True:
        yield seq[:]
        p = n - 1
        while p >= 0 and seq[p] <= 2:
            p -= 1
        if p < 0:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        period = p - q
        for i in range(p, n):
            seq[i] = seq[i - period]


def tree_from_level_sequence(seq: list[int]) -> Graph:
    """Build the tree a preorder level sequence describes.

    Vertex i is the i-th entry; its parent is the most recent vertex one
    level up.  The root must be first and depths may only grow by 1.
    """
    if not seq or seq[0] != 1:
        raise ValueError("level sequence must start at level 1")
    edges = []
    stack = [0]  # stack[d-1] = current ancestor at depth d
    for i in range(1, len(seq)):
        d = seq[i]
        if d < 2 or d > len(stack) + 1:
            raise ValueError(f"level {d} at position {i} breaks preorder")
        del stack[d - 1 :]
        edges.append((stack[-1], i))
        stack.append(i)
    return Graph.from_edges(len(seq), edges)


def tree_centers(adj: list[list[int]]) -> list[int]:
    """Return the 1 or 2 central vertices of a tree given adjacency lists."""
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def _ahu_code(adj: list[list[int]], root: int) -> str:
    """Canonical parenthesis string of the tree rooted at root."""

    def code(v: int, parent: int) -> str:
        subs = sorted(code(u, v) for u in adj[v] if u != parent)
        return "(" + "".join(subs) + ")"

    return code(root, -1)


def free_canonical_form(g: Graph) -> str:
    """Canonical string identifying g up to isomorphism (trees only)."""
    adj = [list(g.neighbors(v)) for v in range(g.n)]
    return min(_ahu_code(adj, c) for c in tree_centers(adj))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Yield one representative of every isomorphism class of trees on n vertices.

    Deterministic order: first appearance in rooted level-sequence order.
    """
    if n < 1:
        raise ValueError("tree order must be at least 1")
    if n > MAX_TREE_ORDER:
        raise ValueError(f"tree enumeration capped at n = {MAX_TREE_ORDER}")
    seen: set[str] = set()
    for seq in rooted_level_sequences(n):
        t = tree_from_level_sequence(seq)
        key = free_canonical_form(t)
        if key not in seen:
            seen.add(key)
            yield t
