"""Maximum-weight bipartite matching on integer weights.

Graphs are given as ``{(left, right): weight}`` mappings. Vertex order is the
order of first appearance, which keeps results deterministic.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Optional

Edges = Mapping[tuple[Hashable, Hashable], int]


def _hungarian(cost: list[list[int]], n: int, m: int) -> list[int]:
    """Min-cost assignment of n rows into m >= n columns; returns col per row."""
    inf = float("inf")
    u = [0] * (n + 1)
    v = [0] * (m + 1)
    p = [0] * (m + 1)
    way = [0] * (m + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [inf] * (m + 1)
        used = [False] * (m + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = inf
            j1 = 0
            row = cost[i0 - 1]
            ui0 = u[i0]
            for j in range(1, m + 1):
                if not used[j]:
                    cur = row[j - 1] - ui0 - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(m + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while True:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
            if j0 == 0:
                break
    col_of = [0] * n
    for j in range(1, m + 1):
        if p[j]:
            col_of[p[j] - 1] = j - 1
    return col_of


def _vertices(edges: Edges, left: Optional[Iterable], right: Optional[Iterable]):
    L = list(dict.fromkeys(left)) if left is not None else []
    R = list(dict.fromkeys(right)) if right is not None else []
    seen_l, seen_r = set(L), set(R)
    for (a, b), w in edges.items():
        if w < 0:
            raise ValueError(f"negative edge weight {w} on {(a, b)}")
        if a not in seen_l:
            if left is not None:
                continue
            seen_l.add(a)
            L.append(a)
        if b not in seen_r:
            if right is not None:
                continue
            seen_r.add(b)
            R.append(b)
    return L, R


def _solve(edges: Edges, required: list, left, right) -> Optional[dict]:
    L, R = _vertices(edges, left, right)
    required = list(dict.fromkeys(required))
    for r in required:
        if r not in L:
            L.append(r)
    n = len(L)
    if n == 0:
        return {}
    li = {a: i for i, a in enumerate(L)}
    ri = {b: j for j, b in enumerate(R)}
    # weight*scale + 1 makes cardinality the secondary objective
    scale = n + 1
    m = len(R) + n
    total = sum(edges.values()) * scale + n + 1
    forbidden = total * (n + 1) + 1
    cost = [[forbidden] * m for _ in range(n)]
    for (a, b), w in edges.items():
        if a in li and b in ri:
            cost[li[a]][ri[b]] = -(w * scale + 1)
    req = set(required)
    for a, i in li.items():
        if a not in req:
            for j in range(len(R), m):
                cost[i][j] = 0
    cols = _hungarian(cost, n, m)
    out = {}
    for i, j in enumerate(cols):
        c = cost[i][j]
        if c == forbidden:
            return None
        if j < len(R):
            out[L[i]] = R[j]
    return out


def max_weight_matching(edges: Edges, left=None, right=None) -> dict:
    """Maximum total weight; among those, maximum cardinality.

    Returns ``{left: right}``.
    """
    return _solve(edges, [], left, right)


def max_weight_saturating_matching(edges: Edges, required_left: Iterable, left=None, right=None) -> Optional[dict]:
    """Best matching covering every vertex of `required_left`, or None."""
    return _solve(edges, list(required_left), left, right)


def matching_weight(edges: Edges, matching: Mapping) -> int:
    return sum(edges[(a, b)] for a, b in matching.items())


def saturates(adj: Mapping[Hashable, Iterable[Hashable]], required: Iterable[Hashable]) -> bool:
    """True iff some matching covers all of `required` (augmenting paths)."""
    owner: dict = {}

    def augment(a, seen):
        for b in adj.get(a, ()):
            if b in seen:
                continue
            seen.add(b)
            if b not in owner or augment(owner[b], seen):
                owner[b] = a
                return True
        return False

    return all(augment(r, set()) for r in required)
