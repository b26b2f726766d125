"""Maximum matching in induced subgraphs of Q_d (Hopcroft-Karp)."""

from __future__ import annotations

from collections import deque
from typing import Sequence

INF = float("inf")


def hypercube_adjacency(d: int, present: Sequence[bool], left: Sequence[int]) -> dict[int, list[int]]:
    """Neighbours inside ``present`` of every vertex in ``left``."""
    bits = [1 << b for b in range(d)]
    return {u: [u ^ b for b in bits if present[u ^ b]] for u in left}


def hopcroft_karp(adj: dict[int, list[int]]) -> dict[int, int]:
    """Maximum matching of a bipartite graph given as left -> right lists.

    Returns ``{left: right}``.  Iteration follows dict and list order, so the
    result is deterministic.
    """
    pair_l: dict[int, int] = {}
    pair_r: dict[int, int] = {}
    dist: dict[int, float] = {}

    # greedy start cuts the number of phases
    for u, nbrs in adj.items():
        for v in nbrs:
            if v not in pair_r:
                pair_l[u] = v
                pair_r[v] = u
                break

    def bfs() -> bool:
        queue = deque()
        for u in adj:
            if u in pair_l:
                dist[u] = INF
            else:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = pair_r.get(v)
                if w is None:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(root: int) -> bool:
        # iterative DFS along layered edges; avoids recursion limits at large d
        stack = [(root, iter(adj[root]))]
        path: list[tuple[int, int]] = []
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                w = pair_r.get(v)
                if w is None:
                    path.append((u, v))
                    for a, b in path:
                        pair_l[a] = b
                        pair_r[b] = a
                    return True
                if dist[w] == dist[u] + 1:
                    path.append((u, v))
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                dist[u] = INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for u in adj:
            if u not in pair_l:
                dfs(u)
    return pair_l


def greedy_matching(adj: dict[int, list[int]]) -> dict[int, int]:
    taken: set[int] = set()
    out = {}
    for u, nbrs in adj.items():
        for v in nbrs:
            if v not in taken:
                taken.add(v)
                out[u] = v
                break
    return out
