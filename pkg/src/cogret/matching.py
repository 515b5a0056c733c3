"""Maximum bipartite matching (Hopcroft-Karp).

The component-pairing steps of the trivially-perfect and fixed-parameter
solvers reduce to bipartite matching; the instance is always bipartite,
so general matching machinery is unnecessary and the O(E sqrt(V)) bound
is kept.  Processing order is fixed so results are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

_INF = -1


@dataclass(frozen=True)
class BipartiteInstance:
    """Bipartite graph on left vertices 0..p-1 and right vertices 0..q-1."""

    p: int
    q: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.p and 0 <= v < self.q):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))


@dataclass(frozen=True)
class Matching:
    """A set of pairwise endpoint-disjoint instance edges."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def right_cover(self) -> frozenset[int]:
        return frozenset(v for _, v in self.pairs)


def max_matching(inst: BipartiteInstance) -> Matching:
    """Maximum-cardinality matching; deterministic for a fixed input order."""
    adj: list[list[int]] = [[] for _ in range(inst.p)]
    for u, v in sorted(inst.edges):
        adj[u].append(v)
    pair_left = [_INF] * inst.p
    pair_right = [_INF] * inst.q
    dist = [0] * inst.p

    def bfs() -> bool:
        queue: deque[int] = deque()
        found = False
        for u in range(inst.p):
            if pair_left[u] == _INF:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = pair_right[v]
                if w == _INF:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = pair_right[v]
            if w == _INF or (dist[w] == dist[u] + 1 and dfs(w)):
                pair_left[u] = v
                pair_right[v] = u
                return True
        dist[u] = _INF
        return False

    while bfs():
        for u in range(inst.p):
            if pair_left[u] == _INF:
                dfs(u)
    pairs = tuple((u, pair_left[u]) for u in range(inst.p) if pair_left[u] != _INF)
    return Matching(pairs=pairs)


def saturates_right(matching: Matching, q: int) -> bool:
    """True iff every right vertex 0..q-1 is matched."""
    return len(matching.right_cover()) == q
