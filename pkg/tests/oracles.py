"""Independent reference implementations used as test oracles.

Everything here recomputes from scratch with plain data structures (dict
adjacency, Floyd-Warshall, itertools subsets, fraction Gaussian
elimination) so that agreement with the package is meaningful.
"""

from fractions import Fraction
from itertools import combinations


def adjacency(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def bfs_row(n, edges, src):
    """Plain queue BFS; unreachable nodes get None."""
    adj = adjacency(n, edges)
    dist = {src: 0}
    queue = [src]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for w in sorted(adj[v]):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return [dist.get(v) for v in range(n)]


def distance_sums(n, edges):
    """(per-node sums, ordered total); raises if disconnected."""
    sums = []
    for src in range(n):
        row = bfs_row(n, edges, src)
        if any(d is None for d in row):
            raise ValueError("disconnected")
        sums.append(sum(row))
    return sums, sum(sums)


def floyd_warshall(n, edges):
    big = 10 * n + 10
    dist = [[0 if i == j else big for j in range(n)] for i in range(n)]
    for u, v in edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik >= big:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def is_connected(n, edges):
    if n == 0:
        return True
    return all(d is not None for d in bfs_row(n, edges, 0))


def utility(n, edges, v, alpha):
    row = bfs_row(n, edges, v)
    deg = sum(1 for e in edges if v in e)
    return Fraction(alpha) * deg + sum(row)


def welfare(n, edges, alpha):
    return sum(utility(n, edges, v, alpha) for v in range(n))


def improving_moves(n, host_edges, active, alpha):
    """Brute-force: recompute both endpoint utilities from scratch per move."""
    alpha = Fraction(alpha)
    active = {tuple(sorted(e)) for e in active}
    host = {tuple(sorted(e)) for e in host_edges}
    out = []
    for u, v in sorted(host - active):
        new = active | {(u, v)}
        if utility(n, new, u, alpha) > utility(n, active, u, alpha) and utility(
            n, new, v, alpha
        ) > utility(n, active, v, alpha):
            out.append(("add", u, v))
    for u, v in sorted(active):
        new = active - {(u, v)}
        if not is_connected(n, new):
            continue
        if utility(n, new, u, alpha) > utility(n, active, u, alpha) or utility(
            n, new, v, alpha
        ) > utility(n, active, v, alpha):
            out.append(("remove", u, v))
    return out


def spanning_trees_brute(n, edges):
    """All labeled spanning trees via size-(n-1) subsets + connectivity."""
    out = []
    for subset in combinations(sorted(edges), n - 1):
        if is_connected(n, subset):
            out.append(frozenset(subset))
    return out


def kirchhoff_count(n, edges):
    """Spanning-tree count by exact determinant of the reduced Laplacian."""
    lap = [[Fraction(0)] * n for _ in range(n)]
    for u, v in edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    mat = [row[1:] for row in lap[1:]]
    size = n - 1
    det = Fraction(1)
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, size):
            factor = mat[r][col] * inv
            if factor:
                for c in range(col, size):
                    mat[r][c] -= factor * mat[col][c]
    assert det.denominator == 1
    return abs(det.numerator)


def connected_spanning_subgraphs(n, edges):
    """Every connected spanning edge subset, as frozensets."""
    edges = sorted(edges)
    out = []
    m = len(edges)
    for mask in range(1 << m):
        subset = [edges[i] for i in range(m) if (mask >> i) & 1]
        if len(subset) >= n - 1 and is_connected(n, subset):
            out.append(frozenset(subset))
    return out
