import itertools

import pytest
from conftest import cross, make

from xword.core import (
    EMPTY,
    H,
    V,
    Alphabet,
    Dictionary,
    DuplicateId,
    DuplicateWord,
    InvalidAssignment,
    LengthTooSmall,
    OverlapSameOrientation,
    Slot,
    UnknownLetter,
    UnknownSlot,
    UnknownWord,
    assignment_key,
    classify_graph,
    evaluate,
    fits,
    grid_graph,
    is_complete_fill,
    validate_grid,
    weight_by_words,
)
from xword.corpus import random_corpus


def test_single_crossing():
    g = validate_grid([Slot("h1", H, 1, 1, 2), Slot("v1", V, 1, 1, 2)])
    assert len(g.shared) == 1
    sc = g.shared[0]
    assert (sc.cell, sc.hslot, sc.hpos, sc.vslot, sc.vpos) == ((1, 1), "h1", 1, "v1", 1)


def test_overlap_same_orientation():
    with pytest.raises(OverlapSameOrientation):
        validate_grid([Slot("a", H, 1, 1, 3), Slot("b", H, 1, 2, 3)])


def test_collinear_touching_allowed():
    g = validate_grid([Slot("a", H, 1, 1, 2), Slot("b", H, 1, 3, 2)])
    assert not g.shared


def test_duplicate_id_and_short_slot():
    with pytest.raises(DuplicateId):
        validate_grid([Slot("a", H, 1, 1, 2), Slot("a", V, 3, 3, 2)])
    with pytest.raises(LengthTooSmall):
        validate_grid([Slot("a", H, 1, 1, 1)])


def test_independent_set_shaped_grid():
    slots = [Slot("r1", H, 1, 1, 3), Slot("r2", H, 3, 1, 3), Slot("c1", V, 1, 1, 3), Slot("c2", V, 1, 3, 3)]
    g = validate_grid(slots)
    assert sorted(sc.cell for sc in g.shared) == [(1, 1), (1, 3), (3, 1), (3, 3)]
    cls = classify_graph(grid_graph(g))
    assert cls.vertex_cover_hint == ["r1", "r2"]


def test_dictionary_rejects_duplicates_and_foreign_letters():
    with pytest.raises(DuplicateWord):
        Dictionary(["ab", "ab"])
    with pytest.raises(UnknownLetter):
        make([Slot("h", H, 1, 1, 2)], "ab", words=["az"])


def test_graph_shapes():
    g = grid_graph(cross().grid)
    assert list(g.edges) == [frozenset({"h1", "v1"})]
    two = validate_grid([Slot("h1", H, 1, 1, 2), Slot("v1", V, 1, 1, 2),
                         Slot("h2", H, 5, 5, 2), Slot("v2", V, 5, 5, 2)])
    c = classify_graph(grid_graph(two))
    assert c.is_matching and c.is_union_of_stars and len(c.components) == 2
    star = validate_grid([Slot("h", H, 1, 1, 5), Slot("v1", V, 1, 1, 2), Slot("v2", V, 1, 3, 2),
                          Slot("v3", V, 1, 5, 2)])
    c = classify_graph(grid_graph(star))
    assert not c.is_matching and c.is_union_of_stars and c.max_degree == 3


def test_fits():
    s2, s3 = Slot("s", H, 1, 1, 2), Slot("t", H, 1, 1, 3)
    assert fits(s2, "ab", {(1, 1): "a"})
    assert not fits(s2, "ab", {(1, 1): "b"})
    assert not fits(s3, "ab", {})


def test_evaluate_fix_cross(fix_cross, fix_cross_noreuse):
    ab, bb = fix_cross.dictionary.lookup("ab"), fix_cross.dictionary.lookup("bb")
    ev = evaluate(fix_cross, {"h1": bb, "v1": bb})
    assert ev.valid and ev.weight == 6
    assert not evaluate(fix_cross, {"h1": ab, "v1": bb}).valid
    assert not evaluate(fix_cross_noreuse, {"h1": ab, "v1": ab}).valid
    assert evaluate(fix_cross, {"h1": EMPTY, "v1": EMPTY}).weight == 0


def test_evaluate_unknowns(fix_cross):
    with pytest.raises(UnknownSlot):
        evaluate(fix_cross, {"zz": 0})
    with pytest.raises(UnknownWord):
        evaluate(fix_cross, {"h1": 9})


def test_prefill_scores_only_when_covered():
    inst = cross(prefills={(1, 1): "b"})
    assert evaluate(inst, inst.empty_assignment()).weight == 0
    bb = inst.dictionary.lookup("bb")
    assert evaluate(inst, {"h1": bb, "v1": EMPTY}).weight == 4
    assert not evaluate(inst, {"h1": inst.dictionary.lookup("ab"), "v1": EMPTY}).valid


def test_complete_fill(fix_cross):
    bb = fix_cross.dictionary.lookup("bb")
    assert is_complete_fill(fix_cross, {"h1": bb, "v1": bb})
    assert not is_complete_fill(fix_cross, {"h1": bb, "v1": EMPTY})
    assert is_complete_fill(make([], "a"), {})
    with pytest.raises(InvalidAssignment):
        is_complete_fill(fix_cross, {"h1": 0, "v1": bb})


def test_key_puts_empty_last(fix_cross):
    assert assignment_key(fix_cross, {"h1": 1, "v1": EMPTY}) > assignment_key(fix_cross, {"h1": 1, "v1": 1})


def _all_assignments(inst):
    choices = [list(inst.candidates[s.id]) + [EMPTY] for s in inst.grid.slots]
    for combo in itertools.product(*choices):
        yield dict(zip([s.id for s in inst.grid.slots], combo))


def test_two_weight_formulas_agree_and_monotone():
    for inst in random_corpus(40, base_seed=500):
        for a in _all_assignments(inst):
            ev = evaluate(inst, a)
            if not ev.valid:
                continue
            assert ev.weight == weight_by_words(inst, a)
            for sid, w in a.items():
                if w is EMPTY:
                    continue
                fewer = dict(a, **{sid: EMPTY})
                assert evaluate(inst, fewer).weight <= ev.weight
            if all(w is not EMPTY for w in a.values()):
                assert set(ev.covered_cells) == inst.grid.cells()


def test_graph_is_bipartite_by_orientation():
    for inst in random_corpus(30, base_seed=900):
        g = grid_graph(inst.grid)
        hs = {s.id for s in inst.grid.horizontal()}
        for e in g.edges:
            assert len(e & hs) == 1
        assert g.is_cover(classify_graph(g).vertex_cover_hint)


def test_alphabet_defaults_and_unit():
    a = Alphabet("ab", {"a": 3})
    assert a.weight("b") == 0
    assert a.unit().weights == {"a": 1, "b": 1}
