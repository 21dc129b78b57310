"""Spanning-tree routing-cost maximization.

Three layers: a greedy long-path seed with a certified length guarantee, the
swap-improvement loop that turns the seeded tree into a swap-maximal
routing-cost spanning tree, and an exact enumeration oracle for the true
maximum at bounded size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import BudgetExceededError, CertificateError, ParameterError, StructureError
from .game import as_alpha, social_welfare
from .graphs import (
    GameState,
    HostGraph,
    TreeScaffold,
    edge,
    tree_swap_delta,
)

BEST_SWAP = "best"
FIRST_SWAP = "first"
PIVOTS = (BEST_SWAP, FIRST_SWAP)


@dataclass(frozen=True)
class SmrcstResult:
    """Output of the swap-maximization loop.

    ``seed_path_length`` is the edge count l of the initial path; the
    certified distance bound is 9 * routing_cost >= n * l^2.
    """

    tree: TreeScaffold
    seed_path_length: int
    iterations: int
    routing_cost: int


def _deepest_dfs_path(host: HostGraph) -> list[int]:
    """Deepest root-to-leaf path over DFS trees from every root.

    In a DFS tree of a connected graph every edge joins an ancestor to a
    descendant, so charging each edge to its deeper endpoint shows the depth
    is at least m/n. That makes this an unconditional fallback for the long
    path guarantee.
    """
    n = host.n
    adj = [sorted(host.adj[v]) for v in range(n)]
    best: list[int] = []
    for root in range(n):
        parent = [-1] * n
        depth = [-1] * n
        depth[root] = 0
        stack = [root]
        deepest = root
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if depth[w] < 0:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    stack.append(w)
                    if depth[w] > depth[deepest]:
                        deepest = w
        if depth[deepest] + 1 > len(best):
            node = deepest
            chain = [node]
            while node != root:
                node = parent[node]
                chain.append(node)
            best = chain[::-1]
    return best


def _exact_longest_path(host: HostGraph, seed: list[int]) -> list[int]:
    """Exact longest simple path by branch and bound (meant for n <= 20).

    Prunes by the size of the unvisited region still reachable from the
    current endpoint; the seed path provides the initial bound.
    """
    n = host.n
    adj_mask = host.adj_mask
    best = list(seed)
    best_len = len(best)
    full = (1 << n) - 1

    def reach_size(start_mask: int, allowed: int) -> int:
        seen = start_mask & allowed
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj_mask[low.bit_length() - 1]
                f ^= low
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen.bit_count()

    stack_path: list[int] = []

    def rec(v: int, visited: int) -> None:
        nonlocal best, best_len
        if best_len == n:
            return
        ext = adj_mask[v] & ~visited
        if len(stack_path) > best_len:
            best = list(stack_path)
            best_len = len(best)
        if not ext:
            return
        allowed = full & ~visited
        if len(stack_path) + reach_size(ext, allowed) <= best_len:
            return
        f = ext
        while f:
            low = f & -f
            w = low.bit_length() - 1
            f ^= low
            stack_path.append(w)
            rec(w, visited | low)
            stack_path.pop()
            if best_len == n:
                return

    for start in range(n):
        if best_len == n:
            break
        stack_path = [start]
        rec(start, 1 << start)
    return best


def greedy_long_path(host: HostGraph) -> list[int]:
    """A simple path whose edge count l satisfies l * n >= m.

    Two-sided greedy: seed at a minimum-degree node, repeatedly step to the
    unvisited neighbor of minimum degree (ties to the smaller label), first
    forward then backward. If the greedy path misses the m/n guarantee the
    exact search takes over for n <= 20 and the DFS-depth fallback beyond.
    """
    n, m = host.n, host.m
    deg = [host.degree(v) for v in range(n)]
    start = min(range(n), key=lambda v: (deg[v], v))
    in_path = [False] * n
    in_path[start] = True
    path = [start]

    def step(v: int) -> Optional[int]:
        cands = [w for w in host.adj[v] if not in_path[w]]
        if not cands:
            return None
        return min(cands, key=lambda w: (deg[w], w))

    while True:
        w = step(path[-1])
        if w is None:
            break
        path.append(w)
        in_path[w] = True
    while True:
        w = step(path[0])
        if w is None:
            break
        path.insert(0, w)
        in_path[w] = True
    if (len(path) - 1) * n < m:
        rescue = _deepest_dfs_path(host)
        if len(rescue) > len(path):
            path = rescue
        if n <= 20:
            path = _exact_longest_path(host, path)
    assert (len(path) - 1) * n >= m, "long-path guarantee violated"
    return path


def extend_to_spanning_tree(host: HostGraph, path) -> TreeScaffold:
    """Grow a spanning tree around a simple path, adding host edges in
    lexicographic order whenever they join two components."""
    nodes = list(path)
    if len(set(nodes)) != len(nodes):
        raise StructureError("path repeats a node")
    for v in nodes:
        if not 0 <= v < host.n:
            raise StructureError(f"path node {v} out of range")
    chosen = []
    for a, b in zip(nodes, nodes[1:]):
        e = edge(a, b)
        if e not in host.edge_index:
            raise StructureError(f"path edge {e} not in host")
        chosen.append(e)
    parent = list(range(host.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[rb] = ra
        return True

    components = host.n
    for a, b in chosen:
        if not union(a, b):
            raise StructureError("path is not simple in the host")
        components -= 1
    for e in host.edges:
        if components == 1:
            break
        if union(*e):
            chosen.append(e)
            components -= 1
    return TreeScaffold(GameState(host, chosen))


def _component_sums(scaffold: TreeScaffold, rem: tuple[int, int]):
    """Within-component distance sums S[w] for both sides of tree - rem.

    One O(n) pass over the scaffold order seeds each component at its natural
    root (the global root for the parent side, the cut child for the child
    side) and reroots along tree edges, which never cross the cut.
    """
    tree_host_n = scaffold.tree.host.n
    n = tree_host_n
    below = scaffold.below_mask[rem]
    a, b = rem
    if (below >> a) & 1:
        a, b = b, a
    size = scaffold.subtree_size
    len_b = size[b]
    len_a = n - len_b
    down = scaffold.down
    smask = scaffold.subtree_mask
    parent = scaffold.parent
    bbit = 1 << b
    s = [0] * n
    s[0] = scaffold.per_node_sum[0] - len_b * scaffold.depth[b] - down[b]
    for w in scaffold.order:
        if w == 0:
            continue
        if w == b:
            s[w] = down[b]
        elif (below >> w) & 1:
            s[w] = s[parent[w]] + len_b - 2 * size[w]
        else:
            sz = size[w] - (len_b if smask[w] & bbit else 0)
            s[w] = s[parent[w]] + len_a - 2 * sz
    return s, below, a, b, len_a, len_b


def _find_swap(scaffold: TreeScaffold, pivot: str):
    """Best (or first) strictly improving swap, or None when swap-maximal.

    For each removable tree edge the component sums are built once; every
    crossing host edge is then scored in O(1).
    """
    tree = scaffold.tree
    host = tree.host
    active = tree.active
    host_edges = host.edges
    best = None
    for e in sorted(active):
        s, below, a, b, len_a, len_b = _component_sums(scaffold, e)
        s_a_a = s[a]
        s_b_b = s[b]
        for f in host_edges:
            if f in active:
                continue
            x, y = f
            xb = (below >> x) & 1
            if xb == (below >> y) & 1:
                continue
            u, v = (y, x) if xb else (x, y)
            delta = 2 * (len_b * (s[u] - s_a_a) + len_a * (s[v] - s_b_b))
            if delta > 0:
                if pivot == FIRST_SWAP:
                    return e, f
                cand = (delta, e, f)
                if best is None or delta > best[0] or (
                    delta == best[0] and (e, f) < (best[1], best[2])
                ):
                    best = cand
    if best is None:
        return None
    return best[1], best[2]


def smrcst(host: HostGraph, pivot: str = BEST_SWAP) -> SmrcstResult:
    """Seeded local search to a swap-maximal routing-cost spanning tree.

    Every candidate (tree edge out, crossing host edge in) is examined at
    termination, so the result admits no strictly improving swap. Each
    applied swap raises the routing cost by at least 1, which bounds the
    iteration count by the path cost (n-1)n(n+1)/3.
    """
    if pivot not in PIVOTS:
        raise ParameterError(f"unknown pivot {pivot!r}; pick one of {PIVOTS}")
    seed = greedy_long_path(host)
    scaffold = extend_to_spanning_tree(host, seed)
    iterations = 0
    while True:
        swap = _find_swap(scaffold, pivot)
        if swap is None:
            break
        e, f = swap
        nxt = GameState(host, (scaffold.tree.active - {e}) | {f})
        scaffold = TreeScaffold(nxt)
        iterations += 1
    return SmrcstResult(scaffold, len(seed) - 1, iterations, scaffold.total)


def _spanning_tree_masks(host: HostGraph, budget: int) -> Iterator[int]:
    """Edge bitmasks of every labeled spanning tree, include-branch first
    over ascending edge indices; raises once the count would pass budget."""
    n = host.n
    m = host.m
    edges = host.edges
    parent = list(range(n))
    size = [1] * n
    undo: list[tuple[int, int]] = []

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def union(a, b) -> bool:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
        undo.append((ra, rb))
        return True

    def rollback():
        ra, rb = undo.pop()
        size[ra] -= size[rb]
        parent[rb] = rb

    emitted = 0

    def rec(i: int, mask: int, components: int) -> Iterator[int]:
        nonlocal emitted
        if components == 1:
            emitted += 1
            if emitted > budget:
                raise BudgetExceededError(
                    f"spanning tree count exceeds budget {budget}"
                )
            yield mask
            return
        if m - i < components - 1:
            return
        u, v = edges[i]
        if union(u, v):
            yield from rec(i + 1, mask | (1 << i), components - 1)
            rollback()
        yield from rec(i + 1, mask, components)

    yield from rec(0, 0, n)


def enumerate_spanning_trees(host: HostGraph, budget: int = 10**6) -> Iterator[TreeScaffold]:
    """Stream every labeled spanning tree exactly once (deterministic order).

    Raises BudgetExceededError instead of silently truncating when the tree
    count passes ``budget``.
    """
    for mask in _spanning_tree_masks(host, budget):
        yield TreeScaffold(GameState._from_mask(host, mask))


def mrcst_exact(host: HostGraph, budget: int = 10**6) -> TreeScaffold:
    """Exact maximum routing-cost spanning tree by enumeration.

    Ties break toward the lexicographically smallest edge bitmask.
    """
    best_cost = -1
    best_mask = None
    for mask in _spanning_tree_masks(host, budget):
        cost = TreeScaffold(GameState._from_mask(host, mask)).total
        if cost > best_cost or (cost == best_cost and mask < best_mask):
            best_cost = cost
            best_mask = mask
    return TreeScaffold(GameState._from_mask(host, best_mask))


def find_hamilton_path(host: HostGraph) -> Optional[list[int]]:
    """A Hamilton path of the host, or None. Exact search; small n only."""
    longest = _exact_longest_path(host, _deepest_dfs_path(host))
    if len(longest) == host.n:
        return longest
    return None


def smrcst_certificates(
    result: SmrcstResult,
    host: HostGraph,
    alpha=None,
    subset_budget: int = 1 << 22,
    tree_budget: int = 10**6,
) -> dict:
    """Re-verify every guarantee attached to a swap-maximal tree.

    Always checked: the seeded distance lower bound 9*routing_cost >= n*l^2,
    the iteration bound (n-1)n(n+1)/3, and swap-maximality by a full rescan.
    With ``alpha`` <= 1 given, additionally checks the welfare ratio
    SW(OPT)/SW(MRCST) <= m/(n-1) + 1 by exact enumeration and records the
    ratio against this result's tree. Raises CertificateError naming the
    violated inequality.
    """
    n, m = host.n, host.m
    l = result.seed_path_length
    rc = result.routing_cost
    if 9 * rc < n * l * l:
        raise CertificateError(
            f"distance bound violated: 9*routing_cost = {9 * rc} < n*l^2 = {n * l * l}"
        )
    iteration_bound = (n - 1) * n * (n + 1) // 3
    if result.iterations > iteration_bound:
        raise CertificateError(
            f"iteration bound violated: {result.iterations} > (n-1)n(n+1)/3 = {iteration_bound}"
        )
    # rescan through the single-swap evaluator, independent of the search loop
    scaffold = result.tree
    active = scaffold.tree.active
    for e in sorted(active):
        below = scaffold.below_mask[e]
        for f in host.edges:
            if f in active:
                continue
            if ((below >> f[0]) & 1) == (below >> f[1]) & 1:
                continue
            if tree_swap_delta(scaffold, e, f) > 0:
                raise CertificateError(
                    f"swap-maximality violated: improving swap ({e}, {f})"
                )
    report = {
        "n": n,
        "m": m,
        "seed_path_length": l,
        "routing_cost": rc,
        "iterations": result.iterations,
        "iteration_bound": iteration_bound,
        "distance_bound_ok": True,
        "swap_maximal": True,
        "welfare_ratio_bound": Fraction(m, n - 1) + 1,
        "welfare_ratio_mrcst": None,
        "welfare_ratio_result": None,
    }
    if alpha is not None:
        a = as_alpha(alpha)
        if a <= 1:
            from .analysis import optimum_exact

            opt = optimum_exact(host, a, subset_budget)
            mr = mrcst_exact(host, tree_budget)
            sw_mr = social_welfare(mr.tree, a)
            ratio = opt.welfare / sw_mr
            bound = report["welfare_ratio_bound"]
            if ratio > bound:
                raise CertificateError(
                    f"approximation bound violated: SW(OPT)/SW(MRCST) = {ratio} "
                    f"> m/(n-1) + 1 = {bound}"
                )
            report["welfare_ratio_mrcst"] = ratio
            report["welfare_ratio_result"] = opt.welfare / social_welfare(
                result.tree.tree, a
            )
    return report
