"""Total bondage computation with certificates.

Deleting edges can only raise the total domination number, so b_t(G) is
found by sweeping edge subsets in increasing size.  Subsets are visited
in colexicographic order within each size; a subset is skipped when the
deletion would isolate a vertex.  Finiteness is decided up front by the
matching criterion 2*nu(G) > gamma_t(G): among isolate-free spanning
subgraphs the total domination number is maximized by edge-minimal
ones, which are star forests, and a star forest with c components has
gamma_t = 2c; the largest such c equals nu(G).  When the criterion
fails no edge deletion can push gamma_t above its ceiling, so b_t is
infinite.  The criterion is validated exhaustively at small orders by
the test suite before anything relies on it.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .domination import _exists_cover, gamma_t
from .graphs import Edge, Graph, _bits

INFINITE_CRITERION = "2*max_matching <= gamma_t"

# staged search never looks past max degree + 9 edges unless told to:
# deep enough for every bound this package checks, with headroom
DEFAULT_CAP_SLACK = 9


@dataclass(frozen=True)
class BondageCertificate:
    """Outcome of a total bondage computation.

    status is "finite" (witness holds a minimum bondage edge set),
    "infinite" (no bondage set exists; criterion names the reason), or
    "unknown-above-cap" (all subsets of size <= cap were exhausted or
    the work budget ran out; cap is the last fully searched size).
    """

    status: str
    b_t: int | None
    witness: frozenset[Edge] | None
    gamma_before: int
    gamma_after: int | None
    cap: int | None = None
    criterion: str | None = None

    def value(self) -> float:
        if self.status == "finite":
            return self.b_t
        if self.status == "infinite":
            return float("inf")
        raise ValueError(f"bondage undecided up to cap {self.cap}")


def max_matching_size(g: Graph) -> int:
    """Maximum matching size, general graphs (blossom contraction)."""
    n = g.n
    adj = [list(_bits(a)) for a in g.adj]
    match = [-1] * n
    for u in range(n):  # greedy seed, halves the augmentation count
        if match[u] == -1:
            for v in adj[u]:
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break

    parent = [-1] * n
    base = list(range(n))
    inq = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = parent[match[y]]

    def mark_path(v: int, b: int, child: int, inb: list[bool]) -> None:
        while base[v] != b:
            inb[base[v]] = True
            inb[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            inq[i] = False
        inq[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in adj[u]:
                if base[u] == base[v] or match[u] == v:
                    continue
                if v == root or (match[v] != -1 and parent[match[v]] != -1):
                    # odd cycle: contract the blossom up to the lca
                    b = lca(u, v)
                    inb = [False] * n
                    mark_path(u, b, v, inb)
                    mark_path(v, b, u, inb)
                    for i in range(n):
                        if inb[base[i]]:
                            base[i] = b
                            if not inq[i]:
                                inq[i] = True
                                queue.append(i)
                elif parent[v] == -1:
                    parent[v] = u
                    if match[v] == -1:
                        return v
                    inq[match[v]] = True
                    queue.append(match[v])
        return -1

    size = sum(1 for u in range(n) if match[u] != -1) // 2
    for u in range(n):
        if match[u] == -1:
            v = find_augmenting(u)
            if v != -1:
                size += 1
                while v != -1:  # flip matched/unmatched along the path
                    pv = parent[v]
                    nxt = match[pv]
                    match[v] = pv
                    match[pv] = v
                    v = nxt
    return size


def bondage_finite(g: Graph) -> bool:
    """Whether any edge subset raises gamma_t while leaving no isolate."""
    return 2 * max_matching_size(g) > gamma_t(g).value


def colex_subsets(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of range(m), ascending inside, colex across."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, m):
        for rest in colex_subsets(top, k - 1):
            yield (*rest, top)


def bondage(g: Graph, cap: int | None = None, work_budget: int | None = None) -> BondageCertificate:
    """Compute b_t(g) by staged subset search, up to cap edge deletions.

    cap defaults to min(m, max_degree + 9).  work_budget, if given,
    limits the number of candidate subsets examined; exhausting it
    yields an unknown-above-cap certificate whose cap is the last fully
    completed size.
    """
    before = gamma_t(g)  # raises on isolated vertices
    gv = before.value
    if 2 * max_matching_size(g) <= gv:
        return BondageCertificate(
            "infinite", None, None, gv, None, criterion=INFINITE_CRITERION
        )
    edges = g.edges()
    m = len(edges)
    if cap is None:
        cap_eff = min(m, g.max_degree() + DEFAULT_CAP_SLACK)
    else:
        cap_eff = max(0, min(cap, m))
    adj0 = list(g.adj)
    degs = list(g.degrees())
    full = (1 << g.n) - 1
    examined = 0
    for k in range(1, cap_eff + 1):
        for combo in colex_subsets(m, k):
            examined += 1
            if work_budget is not None and examined > work_budget:
                return BondageCertificate(
                    "unknown-above-cap", None, None, gv, None, cap=k - 1
                )
            removed: dict[int, int] = {}
            for idx in combo:
                u, v = edges[idx]
                removed[u] = removed.get(u, 0) + 1
                removed[v] = removed.get(v, 0) + 1
            if any(degs[x] == c for x, c in removed.items()):
                continue  # deletion would isolate x
            adj = adj0[:]
            for idx in combo:
                u, v = edges[idx]
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
            if not _exists_cover(adj, full, gv):
                witness = frozenset(edges[idx] for idx in combo)
                after = gamma_t(g.delete_edges(witness))
                return BondageCertificate("finite", k, witness, gv, after.value)
    return BondageCertificate("unknown-above-cap", None, None, gv, None, cap=cap_eff)
