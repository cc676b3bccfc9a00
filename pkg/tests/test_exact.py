import itertools

import pytest
from conftest import cross, make

from xword import exact
from xword.core import EMPTY, H, V, Slot, evaluate
from xword.corpus import full_prefills, random_corpus


def brute_opt(inst):
    """Plain enumeration of every slot -> word | EMPTY map."""
    choices = [list(inst.candidates[s.id]) + [EMPTY] for s in inst.grid.slots]
    best = 0
    for combo in itertools.product(*choices):
        ev = evaluate(inst, dict(zip([s.id for s in inst.grid.slots], combo)))
        if ev.valid:
            best = max(best, ev.weight)
    return best


def brute_complete(inst):
    choices = [list(inst.candidates[s.id]) for s in inst.grid.slots]
    for combo in itertools.product(*choices):
        if evaluate(inst, dict(zip([s.id for s in inst.grid.slots], combo))).valid:
            return True
    return False


def words(inst, res):
    return {k: (None if w is None else inst.dictionary[w]) for k, w in res.best_assignment.items()}


def test_oracle_fix_cross(fix_cross, fix_cross_noreuse):
    r = exact.oracle(fix_cross)
    assert r.best_weight == 6 and words(fix_cross, r) == {"h1": "bb", "v1": "bb"}
    assert exact.oracle(fix_cross_noreuse).best_weight == 4
    assert exact.oracle(make([], "a")).best_weight == 0


def test_oracle_equals_brute_force():
    for inst in random_corpus(80, base_seed=3000):
        assert exact.oracle(inst).best_weight == brute_opt(inst)


def test_oracle_budget(fix_cross):
    with pytest.raises(exact.BudgetExceeded):
        exact.oracle(fix_cross, budget=2)


def test_decide_examples(fix_cross, fix_cross_noreuse):
    assert exact.decide(fix_cross)
    assert not exact.decide(fix_cross_noreuse)
    assert not exact.decide(make([Slot("s", H, 1, 1, 3)], "ab", words=["ab"]))


@pytest.mark.parametrize("algo", ["search", "oracle", "enum", "vc"])
def test_decide_equals_brute_force(algo):
    for inst in random_corpus(60, base_seed=4000):
        assert exact.decide(inst, algo) == brute_complete(inst)


def test_prefilled_examples():
    r = exact.solve_prefilled_reuse(cross(prefills={(1, 1): "b"}))
    assert r.best_weight == 6
    r = exact.solve_prefilled_reuse(cross(prefills={(1, 1): "a"}))
    assert r.best_weight == 5
    inst = cross(prefills={(1, 1): "a"})
    assert words(inst, r) == {"h1": "ab", "v1": "ab"}
    assert exact.solve_prefilled_noreuse(cross(False, {(1, 1): "a"})).best_weight == 3
    nb = cross(False, {(1, 1): "b"})
    r = exact.solve_prefilled_noreuse(nb)
    assert r.best_weight == 4 and words(nb, r) == {"h1": "bb", "v1": None}
    with pytest.raises(exact.PreconditionViolated):
        exact.solve_prefilled_reuse(cross())


def test_prefilled_without_crossings_is_matching():
    inst = make([Slot("a", H, 1, 1, 2), Slot("b", H, 3, 1, 2)], "ab", {"a": 1, "b": 2},
                ["ab", "bb"], reuse=False)
    assert exact.solve_prefilled_noreuse(inst).best_weight == 7


def test_prefilled_equals_oracle():
    for i, inst in enumerate(random_corpus(80, base_seed=5000)):
        p = full_prefills(inst, i)
        assert exact.solve_prefilled(p).best_weight == exact.oracle(p).best_weight


def test_enum_examples(fix_cross, fix_cross_noreuse):
    r = exact.solve_enum_reuse(fix_cross)
    assert r.best_weight == 6 and r.stats["candidates"] == 2
    assert exact.solve_enum_noreuse(fix_cross_noreuse).best_weight == 4
    one = make([Slot("s", H, 1, 1, 2)], "a", words=["aa"])
    assert exact.solve_enum_reuse(one).stats["candidates"] == 1
    assert exact.solve_enum_noreuse(one.with_reuse(False)).best_weight == 2
    none = make([Slot("s", H, 1, 1, 3)], "ab", words=["ab"], reuse=False)
    r = exact.solve_enum_noreuse(none)
    assert r.best_weight == 0 and r.best_assignment == {"s": None}


def test_enum_reuse_counts_every_letter_combination():
    for inst in random_corpus(40, base_seed=6000):
        if inst.reuse:
            r = exact.solve_enum_reuse(inst)
            assert r.stats["candidates"] == len(inst.alphabet) ** len(inst.grid.shared)


def test_vertex_cover_examples(fix_cross, fix_cross_noreuse):
    assert exact.solve_vertex_cover(fix_cross_noreuse, ["h1"]).best_weight == 4
    assert exact.solve_vertex_cover(fix_cross, ["h1", "v1"]).best_weight == 6
    assert exact.solve_vertex_cover(fix_cross, ["v1"]).best_weight == 6
    with pytest.raises(exact.NotAVertexCover):
        exact.solve_vertex_cover(fix_cross, [])


def test_every_solver_equals_oracle():
    for inst in random_corpus(120, base_seed=7000):
        want = exact.oracle(inst).best_weight
        for res in (exact.solve_enum(inst), exact.solve_vertex_cover(inst),
                    exact.solve_vertex_cover(inst, [s.id for s in inst.grid.slots]),
                    exact.solve(inst, "auto")):
            ev = evaluate(inst, res.best_assignment)
            assert ev.valid and ev.weight == res.best_weight == want


def test_results_do_not_depend_on_jobs():
    for inst in random_corpus(12, base_seed=8000):
        for solver in (exact.solve_enum, exact.solve_vertex_cover):
            one, three = solver(inst, jobs=1), solver(inst, jobs=3)
            assert one.best_assignment == three.best_assignment
            assert one.candidates == three.candidates


def test_ties_pick_smallest_key():
    # both words score 2; the smaller index wins
    inst = make([Slot("s", H, 1, 1, 2)], "ab", {"a": 1, "b": 1}, ["ab", "ba"])
    for algo in ("oracle", "enum", "vc", "treewidth"):
        assert exact.solve(inst, algo).best_assignment == {"s": 0}


def test_choose_algo():
    assert exact.choose_algo(cross(prefills={(1, 1): "a"})) == "prefilled"
    assert exact.choose_algo(cross()) == "treewidth"
    assert exact.choose_algo(cross(False)) == "vc"


def test_budget_env(monkeypatch, fix_cross):
    monkeypatch.setenv("XWORD_BUDGET", "1")
    with pytest.raises(exact.BudgetExceeded):
        exact.oracle(fix_cross)
