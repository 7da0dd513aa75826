"""Pure-Python bitset kernels.

Every set is an ``int`` bitmask over element indices. ``adj[i]`` is the
neighbourhood of ``i`` in some undirected graph and never contains ``i``
itself. The compiled twin in ``_ckernels.pyx`` implements the same
functions with identical results.
"""

from __future__ import annotations


def transitive_closure(rows: list[int], n: int) -> list[int]:
    """Warshall's algorithm on bitset rows; ``rows[i]`` holds ``j`` iff i -> j."""
    rows = list(rows)
    for k in range(n):
        bk = 1 << k
        rk = rows[k]
        for i in range(n):
            if rows[i] & bk:
                rows[i] |= rk
    return rows


def max_clique(adj: list[int], cand: int) -> int:
    """Lexicographically first maximum clique inside ``cand``.

    Vertices are branched in ascending index order, include-first, so
    cliques are visited in lexicographic order of their sorted index
    tuples. Pruning uses ``<=`` which keeps the first maximum found.
    """
    best = 0
    best_size = 0

    def grow(cand: int, cur: int, size: int) -> None:
        nonlocal best, best_size
        if size > best_size:
            best, best_size = cur, size
        while cand:
            if size + cand.bit_count() <= best_size:
                return
            bit = cand & -cand
            v = bit.bit_length() - 1
            grow(cand & adj[v], cur | bit, size + 1)
            cand &= ~bit

    grow(cand, 0, 0)
    return best


def first_clique_of_size(adj: list[int], cand: int, k: int, skip_a: int, skip_b: int) -> int:
    """First clique of size ``k`` (lexicographic) other than ``skip_a``/``skip_b``; 0 if none."""
    if k <= 0:
        return 0

    def search(cand: int, cur: int, size: int) -> int:
        if size == k:
            return 0 if cur == skip_a or cur == skip_b else cur
        while cand:
            if size + cand.bit_count() < k:
                return 0
            bit = cand & -cand
            v = bit.bit_length() - 1
            found = search(cand & adj[v], cur | bit, size + 1)
            if found:
                return found
            cand &= ~bit
        return 0

    return search(cand, 0, 0)


def min_clique_partition(adj: list[int], n: int) -> int:
    """Fewest cliques partitioning all ``n`` vertices, by DP over subsets.

    f(S) = 1 + min f(S minus c) over cliques c in S containing the lowest
    vertex of S. Every such clique is enumerated, no dominance pruning.
    """
    full = (1 << n) - 1
    f = [0] * (full + 1)

    for s in range(1, full + 1):
        low = s & -s
        v = low.bit_length() - 1
        best = n + 1
        stack = [(s & adj[v], low)]
        while stack:
            cand, removed = stack.pop()
            val = f[s & ~removed]
            if val < best:
                best = val
            while cand:
                bit = cand & -cand
                cand &= ~bit
                u = bit.bit_length() - 1
                stack.append((cand & adj[u], removed | bit))
        f[s] = best + 1
    return f[full]
