import itertools
import random

import pytest
from conftest import cross, make

from xword import exact
from xword.core import H, V, Slot, grid_graph
from xword.corpus import path_instance, random_corpus
from xword.treewidth import (
    TooLargeForExact,
    TreeDecomposition,
    check_decomposition,
    check_nice,
    make_nice,
    solve_treewidth,
    tree_decomposition,
    treewidth,
)


def elimination_width(adj, order):
    adj = {v: set(n) for v, n in adj.items()}
    width = 0
    for v in order:
        nb = adj.pop(v)
        width = max(width, len(nb))
        for a in nb:
            adj[a] |= nb - {a}
            adj[a].discard(v)
    return width


def brute_treewidth(adj):
    return min(elimination_width(adj, p) for p in itertools.permutations(adj))


def bipartite(a, b, edges):
    adj = {f"l{i}": set() for i in range(a)} | {f"r{j}": set() for j in range(b)}
    for i, j in edges:
        adj[f"l{i}"].add(f"r{j}")
        adj[f"r{j}"].add(f"l{i}")
    return adj


def test_small_examples():
    td = tree_decomposition(grid_graph(cross().grid))
    assert td.width == 1 and frozenset({"h1", "v1"}) in td.bags
    k23 = bipartite(2, 3, [(i, j) for i in range(2) for j in range(3)])
    assert treewidth(k23, "exact_small") == 2
    assert treewidth({"a": set(), "b": set(), "c": set()}, "exact_small") == 0


def test_exact_matches_permutation_brute_force():
    rng = random.Random(5)
    for _ in range(40):
        a, b = rng.randint(1, 3), rng.randint(1, 4)
        edges = [(i, j) for i in range(a) for j in range(b) if rng.random() < 0.6]
        adj = bipartite(a, b, edges)
        want = brute_treewidth(adj)
        for method in ("exact_small", "minfill", "mindegree"):
            td = tree_decomposition(adj, method)
            assert check_decomposition(td, adj) == []
            assert td.width >= want
            if method == "exact_small":
                assert td.width == want


def test_exact_size_limit():
    adj = {str(i): set() for i in range(13)}
    with pytest.raises(TooLargeForExact):
        tree_decomposition(adj, "exact_small")


def test_checker_catches_broken_decomposition():
    adj = {"a": {"b"}, "b": {"a", "c"}, "c": {"b"}}
    bad = TreeDecomposition([frozenset("ab"), frozenset("c"), frozenset("b")], [(0, 1), (1, 2)])
    assert check_decomposition(bad, adj)


def test_nice_forms():
    one = TreeDecomposition([frozenset({"a", "b"})], [])
    nice = make_nice(one)
    kinds = [n.kind for n in nice.nodes]
    assert kinds == ["leaf", "introduce", "introduce", "forget", "forget"]
    assert check_nice(nice) == []
    two = TreeDecomposition([frozenset("ab"), frozenset("bc")], [(0, 1)])
    assert check_nice(make_nice(two)) == []
    for inst in random_corpus(40, base_seed=1200):
        td = tree_decomposition(grid_graph(inst.grid))
        nice = make_nice(td)
        assert check_nice(nice) == [] and nice.width == td.width


def test_dp_examples(fix_cross):
    assert solve_treewidth(fix_cross).best_weight == 6
    disjoint = make([Slot("a", H, 1, 1, 2), Slot("b", H, 3, 1, 2)], "ab", {"a": 1, "b": 2}, ["ab", "bb"])
    r = solve_treewidth(disjoint)
    assert r.best_weight == 8 and r.stats["width"] == 0
    star = make([Slot("h", H, 1, 1, 3), Slot("v1", V, 1, 1, 2), Slot("v2", V, 1, 3, 2)],
                "ab", {"a": 1, "b": 2}, ["bbb", "bab", "ab", "bb", "ba"])
    assert solve_treewidth(star).best_weight == exact.oracle(star).best_weight


def test_no_reuse_rejected(fix_cross_noreuse):
    with pytest.raises(exact.ReuseRequired):
        solve_treewidth(fix_cross_noreuse)


def test_dp_equals_oracle_with_any_decomposition():
    for inst in random_corpus(160, base_seed=2000):
        if not inst.reuse:
            continue
        want = exact.oracle(inst).best_weight
        for method in ("minfill", "mindegree", "exact_small"):
            r = solve_treewidth(inst, method=method)
            assert r.best_weight == want
            m = r.stats["choices"]
            assert all(size <= m ** bag for bag, size in r.stats["table_sizes"])


def test_dp_with_prefills():
    inst = cross(prefills={(1, 1): "a"})
    assert solve_treewidth(inst).best_weight == 5


def test_path_corpus_is_width_one():
    for m in (4, 8):
        r = solve_treewidth(path_instance(m))
        assert r.stats["width"] == 1
        assert max(size for _, size in r.stats["table_sizes"]) == (m + 1) ** 2


def test_budget():
    with pytest.raises(exact.BudgetExceeded):
        solve_treewidth(path_instance(8), budget=10)
