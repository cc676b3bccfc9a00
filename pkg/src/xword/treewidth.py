"""Tree decompositions of the grid graph and the reuse-mode DP over them.

The DP keeps, per nice-decomposition node, a table from bag states (a word or
EMPTY per bag slot) to ``(W, Wm)``: the weight of the bag state alone and the
best weight over the node's whole subtree agreeing with it. Tables therefore
hold at most ``(m+1)^|bag|`` entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from .core import EMPTY, GridGraph, Instance, XwordError, grid_graph
from .exact import BudgetExceeded, ReuseRequired, SolveResult, _finish, default_budget

EXACT_LIMIT = 12


class TooLargeForExact(XwordError):
    pass


@dataclass
class TreeDecomposition:
    bags: list[frozenset]
    edges: list[tuple[int, int]]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1 if any(self.bags) else 0

    def neighbors(self) -> dict[int, list[int]]:
        nb: dict[int, list[int]] = {i: [] for i in range(len(self.bags))}
        for a, b in self.edges:
            nb[a].append(b)
            nb[b].append(a)
        return nb


def _adjacency(g) -> tuple[list, dict]:
    if isinstance(g, GridGraph):
        return list(g.vertices), {v: set(g.adj[v]) for v in g.vertices}
    return list(g), {v: set(n) for v, n in g.items()}


def _fill_in(adj: dict, v) -> int:
    nb = sorted(adj[v], key=str)
    return sum(1 for i, a in enumerate(nb) for b in nb[i + 1:] if b not in adj[a])


def _elimination_order(vertices: list, adj: dict, method: str) -> list:
    adj = {v: set(n) for v, n in adj.items()}
    rank = {v: i for i, v in enumerate(vertices)}
    order = []
    while adj:
        if method == "minfill":
            v = min(adj, key=lambda x: (_fill_in(adj, x), len(adj[x]), rank[x]))
        else:
            v = min(adj, key=lambda x: (len(adj[x]), rank[x]))
        order.append(v)
        nb = adj.pop(v)
        for a in nb:
            adj[a].discard(v)
            adj[a] |= nb - {a}
    return order


def _exact_order(vertices: list, adj: dict) -> list:
    """Optimal elimination order by DP over vertex subsets."""
    n = len(vertices)
    if n > EXACT_LIMIT:
        raise TooLargeForExact(f"{n} vertices exceed the exact limit of {EXACT_LIMIT}")
    idx = {v: i for i, v in enumerate(vertices)}
    nbm = [sum(1 << idx[u] for u in adj[v]) for v in vertices]

    def q(mask: int, v: int) -> int:
        # vertices outside mask+v reachable from v through mask
        seen = 1 << v
        stack = [v]
        out = 0
        while stack:
            x = stack.pop()
            for y in range(n):
                if nbm[x] >> y & 1 and not seen >> y & 1:
                    seen |= 1 << y
                    if mask >> y & 1:
                        stack.append(y)
                    else:
                        out += 1
        return out

    full = (1 << n) - 1
    best = {0: -1}
    choice = {}
    for mask in sorted(range(1, full + 1), key=lambda m: bin(m).count("1")):
        val, pick = None, None
        for v in range(n):
            if mask >> v & 1:
                rest = mask & ~(1 << v)
                cand = max(best[rest], q(rest, v))
                if val is None or cand < val:
                    val, pick = cand, v
        best[mask], choice[mask] = val, pick
    order = []
    mask = full
    while mask:
        v = choice[mask]
        order.append(vertices[v])
        mask &= ~(1 << v)
    return order[::-1]


def decomposition_from_order(vertices: list, adj: dict, order: list) -> TreeDecomposition:
    adj = {v: set(n) for v, n in adj.items()}
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    parent_vertex = []
    for v in order:
        nb = adj[v]
        bags.append(frozenset(nb | {v}))
        later = [u for u in nb if pos[u] > pos[v]]
        parent_vertex.append(min(later, key=pos.get) if later else None)
        for a in nb:
            adj[a].discard(v)
            adj[a] |= nb - {a}
        del adj[v]
    if not bags:
        return TreeDecomposition([frozenset()], [])
    edges = []
    roots = []
    for i, p in enumerate(parent_vertex):
        if p is None:
            roots.append(i)
        else:
            edges.append((pos[p], i))
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    return TreeDecomposition(bags, sorted(edges))


def tree_decomposition(g, method: str = "minfill") -> TreeDecomposition:
    vertices, adj = _adjacency(g)
    if method == "exact_small":
        order = _exact_order(vertices, adj)
    elif method in ("minfill", "mindegree"):
        order = _elimination_order(vertices, adj, method)
    else:
        raise ValueError(f"unknown decomposition method {method!r}")
    return decomposition_from_order(vertices, adj, order)


def treewidth(g, method: str = "minfill") -> int:
    return tree_decomposition(g, method).width


def check_decomposition(td: TreeDecomposition, g) -> list[str]:
    """Problems with `td` as a decomposition of `g`; empty when valid."""
    vertices, adj = _adjacency(g)
    problems = []
    nb = td.neighbors()
    if len(td.edges) != len(td.bags) - 1:
        problems.append("tree must have |bags|-1 edges")
    seen, stack = {0}, [0]
    while stack:
        for y in nb[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(td.bags):
        problems.append("tree is not connected")
    for v in vertices:
        holders = {i for i, b in enumerate(td.bags) if v in b}
        if not holders:
            problems.append(f"vertex {v} in no bag")
            continue
        start = min(holders)
        reach, stack = {start}, [start]
        while stack:
            for y in nb[stack.pop()]:
                if y in holders and y not in reach:
                    reach.add(y)
                    stack.append(y)
        if reach != holders:
            problems.append(f"bags holding {v} are not connected")
    for v in vertices:
        for u in adj[v]:
            if not any(u in b and v in b for b in td.bags):
                problems.append(f"edge {v}-{u} in no bag")
    return problems


@dataclass
class NiceNode:
    kind: str  # leaf | introduce | forget | join
    bag: frozenset
    vertex: Optional[str] = None
    children: tuple[int, ...] = ()


@dataclass
class NiceTreeDecomposition:
    nodes: list[NiceNode]  # children always precede parents
    root: int

    @property
    def width(self) -> int:
        return max((len(n.bag) for n in self.nodes), default=0) - 1 if self.nodes else 0


def make_nice(td: TreeDecomposition, root: int = 0) -> NiceTreeDecomposition:
    nodes: list[NiceNode] = []

    def add(kind, bag, vertex=None, children=()):
        nodes.append(NiceNode(kind, frozenset(bag), vertex, tuple(children)))
        return len(nodes) - 1

    def move(node: int, target: frozenset) -> int:
        bag = nodes[node].bag
        for v in sorted(bag - target, key=str):
            bag = bag - {v}
            node = add("forget", bag, v, (node,))
        for v in sorted(target - bag, key=str):
            bag = bag | {v}
            node = add("introduce", bag, v, (node,))
        return node

    nb = td.neighbors()
    parent = {root: None}
    order = [root]
    for t in order:
        for c in sorted(nb[t]):
            if c not in parent:
                parent[c] = t
                order.append(c)
    built: dict[int, int] = {}
    for t in reversed(order):
        target = td.bags[t]
        kids = [c for c in sorted(nb[t]) if parent.get(c) == t]
        if not kids:
            built[t] = move(add("leaf", ()), target)
            continue
        subs = [move(built[c], target) for c in kids]
        cur = subs[0]
        for s in subs[1:]:
            cur = add("join", target, None, (cur, s))
        built[t] = cur
    top = move(built[root], frozenset())
    return NiceTreeDecomposition(nodes, top)


def check_nice(nice: NiceTreeDecomposition) -> list[str]:
    problems = []
    for i, n in enumerate(nice.nodes):
        kids = [nice.nodes[c] for c in n.children]
        if any(c >= i for c in n.children):
            problems.append(f"node {i}: child after parent")
        if n.kind == "leaf":
            if n.bag or kids:
                problems.append(f"node {i}: leaf must be empty and childless")
        elif n.kind == "introduce":
            if len(kids) != 1 or n.vertex in kids[0].bag or n.bag != kids[0].bag | {n.vertex}:
                problems.append(f"node {i}: bad introduce")
        elif n.kind == "forget":
            if len(kids) != 1 or n.vertex not in kids[0].bag or n.bag != kids[0].bag - {n.vertex}:
                problems.append(f"node {i}: bad forget")
        elif n.kind == "join":
            if len(kids) != 2 or any(k.bag != n.bag for k in kids):
                problems.append(f"node {i}: bad join")
        else:
            problems.append(f"node {i}: unknown kind {n.kind}")
    if nice.nodes and nice.nodes[nice.root].bag:
        problems.append("root bag must be empty")
    return problems


# ------------------------------------------------------------------ DP


@dataclass
class _Entry:
    W: int
    Wm: int
    back: tuple = field(default=())


def solve_treewidth(instance: Instance, td: Optional[TreeDecomposition] = None, method: str = "minfill",
                    budget: Optional[int] = None) -> SolveResult:
    """Reuse-mode optimum by DP over a nice tree decomposition."""
    if not instance.reuse:
        raise ReuseRequired("the treewidth DP needs reuse = true")
    budget = default_budget() if budget is None else budget
    g = grid_graph(instance.grid)
    if td is None:
        td = tree_decomposition(g, method)
    nice = make_nice(td)
    words = instance.dictionary
    wt = instance.alphabet.weights
    grid = instance.grid
    # for each ordered pair of crossing slots, (pos in first, pos in second, cell)
    cross: dict[tuple[str, str], tuple[int, int]] = {}
    for sc in grid.shared:
        cross[(sc.hslot, sc.vslot)] = (sc.hpos - 1, sc.vpos - 1)
        cross[(sc.vslot, sc.hslot)] = (sc.vpos - 1, sc.hpos - 1)
    choices = {s.id: list(instance.candidates[s.id]) + [EMPTY] for s in grid.slots}

    def gain(v: str, d, state: Mapping[str, Optional[int]]) -> Optional[int]:
        """Weight v adds next to `state`, or None when inconsistent."""
        if d is EMPTY:
            return 0
        g_ = instance.word_weights[d]
        for u, e in state.items():
            if e is EMPTY or (v, u) not in cross:
                continue
            pv, pu = cross[(v, u)]
            if words[d][pv] != words[e][pu]:
                return None
            g_ -= wt[words[d][pv]]
        return g_

    tables: list[dict] = []
    sizes = []
    total = 0
    for n in nice.nodes:
        order = sorted(n.bag, key=str)
        table: dict[tuple, _Entry] = {}
        if n.kind == "leaf":
            table[()] = _Entry(0, 0)
        elif n.kind == "introduce":
            child = tables[n.children[0]]
            corder = sorted(nice.nodes[n.children[0]].bag, key=str)
            at = order.index(n.vertex)
            for key, ent in child.items():
                state = dict(zip(corder, key))
                for d in choices[n.vertex]:
                    g_ = gain(n.vertex, d, state)
                    if g_ is None:
                        continue
                    table[key[:at] + (d,) + key[at:]] = _Entry(ent.W + g_, ent.Wm + g_, (key,))
        elif n.kind == "forget":
            child = tables[n.children[0]]
            corder = sorted(nice.nodes[n.children[0]].bag, key=str)
            at = corder.index(n.vertex)
            for key, ent in child.items():
                state = dict(zip(corder, key))
                d = state.pop(n.vertex)
                W = ent.W - gain(n.vertex, d, state)
                new = key[:at] + key[at + 1:]
                cur = table.get(new)
                if cur is None or ent.Wm > cur.Wm:
                    table[new] = _Entry(W, ent.Wm, (key,))
        else:
            left, right = (tables[c] for c in n.children)
            for key, a in left.items():
                b = right.get(key)
                if b is not None:
                    table[key] = _Entry(a.W, a.Wm + b.Wm - a.W, (key, key))
        total += len(table)
        if total > budget:
            raise BudgetExceeded(f"DP tables exceeded {budget} entries")
        sizes.append((len(n.bag), len(table)))
        tables.append(table)

    assignment: dict[str, Optional[int]] = {}
    stack = [(nice.root, ())]
    while stack:
        i, key = stack.pop()
        n = nice.nodes[i]
        ent = tables[i][key]
        if n.kind == "forget":
            corder = sorted(nice.nodes[n.children[0]].bag, key=str)
            assignment[n.vertex] = ent.back[0][corder.index(n.vertex)]
        for c, k in zip(n.children, ent.back):
            stack.append((c, k))
    best = tables[nice.root][()].Wm
    stats = {
        "candidates": total,
        "width": td.width,
        "nodes": len(nice.nodes),
        "table_sizes": sizes,
        "choices": len(words) + 1,
    }
    res = _finish(instance, assignment, "treewidth", stats)
    if res.best_weight != best:
        raise AssertionError(f"treewidth DP value {best} != evaluated {res.best_weight}")
    return res
