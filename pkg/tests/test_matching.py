import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from xword.matching import matching_weight, max_weight_matching, max_weight_saturating_matching, saturates


def brute(edges, required=()):
    lefts = sorted({a for a, _ in edges} | set(required))
    best = None
    options = {a: [None] + [b for (x, b) in edges if x == a] for a in lefts}
    for combo in itertools.product(*(options[a] for a in lefts)):
        used = [b for b in combo if b is not None]
        if len(used) != len(set(used)):
            continue
        if any(combo[lefts.index(r)] is None for r in required):
            continue
        m = {a: b for a, b in zip(lefts, combo) if b is not None}
        score = (matching_weight(edges, m), len(m))
        if best is None or score > best:
            best = score
    return best


def is_matching(m):
    return len(set(m.values())) == len(m)


def test_examples():
    assert max_weight_matching({("s", "w1"): 3, ("s", "w2"): 4}) == {"s": "w2"}
    assert max_weight_matching({}) == {}
    e = {("s1", "w1"): 5, ("s1", "w2"): 5, ("s2", "w2"): 5}
    assert max_weight_matching(e) == {"s1": "w1", "s2": "w2"}


def test_saturating_examples():
    assert max_weight_saturating_matching({}, ["s1"]) is None
    assert max_weight_saturating_matching({("s1", "w1"): 0, ("s1", "w2"): 7}, ["s1"]) == {"s1": "w2"}
    e = {("s1", "w1"): 9, ("s2", "w1"): 9, ("s2", "w2"): 1}
    m = max_weight_saturating_matching(e, ["s1", "s2"])
    assert m == {"s1": "w1", "s2": "w2"} and matching_weight(e, m) == 10


def test_zero_edges_still_taken():
    assert max_weight_matching({("a", "x"): 0}) == {"a": "x"}


def test_left_restriction():
    e = {("a", "x"): 5, ("b", "x"): 9}
    assert max_weight_matching(e, left=["a"]) == {"a": "x"}


edge_sets = st.dictionaries(
    st.tuples(st.sampled_from("abcdefg"), st.sampled_from("1234567")),
    st.integers(0, 9), max_size=14)


@settings(max_examples=300, deadline=None)
@given(edge_sets)
def test_matches_brute_force(edges):
    m = max_weight_matching(edges)
    assert is_matching(m)
    assert all((a, b) in edges for a, b in m.items())
    assert (matching_weight(edges, m), len(m)) == brute(edges)
    assert max_weight_saturating_matching(edges, []) == m


@settings(max_examples=300, deadline=None)
@given(edge_sets, st.sets(st.sampled_from("abcdefg"), max_size=4))
def test_saturating_matches_brute_force(edges, required):
    m = max_weight_saturating_matching(edges, sorted(required))
    want = brute(edges, sorted(required))
    adj = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
    assert saturates(adj, sorted(required)) == (want is not None)
    if want is None:
        assert m is None
    else:
        assert is_matching(m) and set(required) <= set(m)
        assert matching_weight(edges, m) == want[0]
