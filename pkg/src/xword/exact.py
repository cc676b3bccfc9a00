"""Exact CP-Opt / CP-Dec solvers.

* `oracle` - exhaustive backtracking, the reference for everything else.
* `solve_prefilled_reuse` / `solve_prefilled_noreuse` - all shared cells fixed.
* `solve_enum_reuse` / `solve_enum_noreuse` - enumerate shared-cell letters.
* `solve_vertex_cover` - enumerate words on a vertex cover, complete the rest.
* `find_complete_fill` / `decide` - complete-fill search for CP-Dec.

Every solver returns a `SolveResult` whose weight `core.evaluate` confirms.
Among optimal assignments the enumeration solvers return the one with the
smallest `assignment_key`, so results do not depend on `jobs`.
"""

from __future__ import annotations

import multiprocessing
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Mapping, Optional

from .core import (
    EMPTY,
    Instance,
    XwordError,
    assignment_key,
    classify_graph,
    evaluate,
    grid_graph,
    normalize,
)
from .matching import max_weight_matching, max_weight_saturating_matching, saturates

DEFAULT_BUDGET = 10**7


class BudgetExceeded(XwordError):
    pass


class PreconditionViolated(XwordError):
    pass


class ReuseRequired(PreconditionViolated):
    pass


class NotAVertexCover(PreconditionViolated):
    pass


def default_budget() -> int:
    env = os.environ.get("XWORD_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise XwordError(f"XWORD_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


@dataclass
class SolveResult:
    best_weight: int
    best_assignment: dict
    stats: dict = field(default_factory=dict)
    algo: str = ""

    @property
    def candidates(self) -> int:
        return self.stats.get("candidates", self.stats.get("nodes", 0))


def _finish(instance: Instance, a: Mapping, algo: str, stats: dict) -> SolveResult:
    a = normalize(instance, a)
    ev = evaluate(instance, a)
    if not ev.valid:
        raise AssertionError(f"{algo} produced an invalid assignment: {ev.reason}")
    return SolveResult(ev.weight, a, stats, algo)


def _letters_at(instance: Instance, slot_id: str, w: int, cells) -> tuple:
    s = instance.grid.by_id[slot_id]
    word = instance.dictionary[w]
    return tuple(word[s.position(c) - 1] for c in cells)


def _private_weight(instance: Instance, slot_id: str, w: int) -> int:
    """Word weight minus the letters it writes on shared cells."""
    wt = instance.alphabet.weights
    word = instance.dictionary[w]
    return instance.word_weights[w] - sum(
        wt[word[sc.pos_in(slot_id) - 1]] for sc in instance.grid.shared_of(slot_id)
    )


def _consistent(instance: Instance, slot_id: str, fixed: Mapping) -> list[int]:
    """Candidates of `slot_id` agreeing with `fixed` (cell -> letter)."""
    s = instance.grid.by_id[slot_id]
    words = instance.dictionary
    checks = [(s.position(c) - 1, ch) for c, ch in fixed.items() if s.position(c) is not None]
    return [w for w in instance.candidates[slot_id] if all(words[w][p] == ch for p, ch in checks)]


def _greedy(instance: Instance, slot_id: str, fixed: Mapping) -> Optional[int]:
    """Heaviest consistent word, smallest index on ties; EMPTY if none."""
    best, best_w = EMPTY, -1
    for w in _consistent(instance, slot_id, fixed):
        if instance.word_weights[w] > best_w:
            best, best_w = w, instance.word_weights[w]
    return best


def _better(weight: int, key: tuple, best: Optional[tuple]) -> bool:
    return best is None or weight > best[0] or (weight == best[0] and key < best[1])


# ---------------------------------------------------------------- oracle


def oracle(instance: Instance, budget: Optional[int] = None, *, require_complete: bool = False) -> SolveResult:
    """Exhaustive search over slot -> word | EMPTY with consistency pruning.

    Slots are taken in id order and words in index order with EMPTY last, and
    only strict improvements are kept, so the first optimum found is the
    lexicographically smallest. With `require_complete`, EMPTY is never tried
    and the result has weight -1 when no complete fill exists.
    """
    budget = default_budget() if budget is None else budget
    slots = instance.grid.slots
    words = instance.dictionary
    wt = instance.alphabet.weights
    cands = [instance.candidates[s.id] for s in slots]
    cells = [s.cells() for s in slots]
    letter: dict = {}
    count: dict = {}
    used: dict[int, int] = {}
    current: list[Optional[int]] = [EMPTY] * len(slots)
    best: list = [-1, None]
    nodes = 0

    def rec(i: int, weight: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"oracle exceeded {budget} nodes")
        if i == len(slots):
            if weight > best[0]:
                best[0], best[1] = weight, list(current)
            return
        for w in cands[i]:
            if not instance.reuse and used.get(w):
                continue
            word = words[w]
            if any(letter.get(c, ch) != ch for c, ch in zip(cells[i], word)):
                continue
            gain = 0
            for c, ch in zip(cells[i], word):
                if count.get(c, 0) == 0:
                    letter[c] = ch
                    gain += wt[ch]
                count[c] = count.get(c, 0) + 1
            used[w] = used.get(w, 0) + 1
            current[i] = w
            rec(i + 1, weight + gain)
            current[i] = EMPTY
            used[w] -= 1
            for c in cells[i]:
                count[c] -= 1
                if count[c] == 0:
                    del letter[c]
        if not require_complete:
            rec(i + 1, weight)

    rec(0, 0)
    stats = {"nodes": nodes, "candidates": nodes}
    if best[1] is None:
        return SolveResult(-1, instance.empty_assignment(), stats, "oracle")
    a = {s.id: w for s, w in zip(slots, best[1])}
    return _finish(instance, a, "oracle", stats)


# ------------------------------------------------------- parallel reduction


def _reduce(parts: list[dict], instance: Instance, algo: str, extra: dict) -> SolveResult:
    best = None
    for p in parts:
        if p["assignment"] is not None and _better(p["weight"], p["key"], best):
            best = (p["weight"], p["key"], p["assignment"])
    stats = {
        "candidates": parts[0]["enumerated"],
        "evaluated": sum(p["evaluated"] for p in parts),
        **extra,
    }
    a = best[2] if best else instance.empty_assignment()
    res = _finish(instance, a, algo, stats)
    if best and res.best_weight != best[0]:
        raise AssertionError(f"{algo}: objective {best[0]} != evaluated {res.best_weight}")
    return res


def _run(worker: Callable, instance: Instance, arg, jobs: int) -> list[dict]:
    if jobs <= 1:
        return [worker(instance, arg, 0, 1)]
    ctx = multiprocessing.get_context("fork")
    with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as ex:
        futs = [ex.submit(worker, instance, arg, r, jobs) for r in range(jobs)]
        return [f.result() for f in futs]


class _Best:
    def __init__(self):
        self.best = None
        self.evaluated = 0

    def offer(self, weight: int, key: tuple, a: dict):
        if _better(weight, key, self.best):
            self.best = (weight, key, dict(a))

    def result(self, enumerated: int) -> dict:
        w, k, a = self.best if self.best else (-1, None, None)
        return {"weight": w, "key": k, "assignment": a,
                "evaluated": self.evaluated, "enumerated": enumerated}


# ------------------------------------------------------------ enumeration


def _slot_tables(instance: Instance):
    """Per slot: its shared cells and, per letter pattern on them, the best word."""
    tables = {}
    for s in instance.grid.slots:
        cells = [sc.cell for sc in instance.grid.shared_of(s.id)]
        by_pattern: dict[tuple, int] = {}
        for w in instance.candidates[s.id]:
            pat = _letters_at(instance, s.id, w, cells)
            cur = by_pattern.get(pat)
            if cur is None or instance.word_weights[w] > instance.word_weights[cur]:
                by_pattern[pat] = w
        tables[s.id] = (cells, by_pattern)
    return tables


def _enum_reuse_part(instance: Instance, _arg, residue: int, stride: int) -> dict:
    shared = instance.grid.shared
    shared_cells = [sc.cell for sc in shared]
    wt = instance.alphabet.weights
    tables = _slot_tables(instance)
    private = {(s.id, w): _private_weight(instance, s.id, w)
               for s in instance.grid.slots for w in instance.candidates[s.id]}
    acc = _Best()
    idx = -1
    for idx, combo in enumerate(product(instance.alphabet.letters, repeat=len(shared))):
        if idx % stride != residue:
            continue
        acc.evaluated += 1
        fixed = dict(zip(shared_cells, combo))
        a = {}
        weight = 0
        for s in instance.grid.slots:
            cells, by_pattern = tables[s.id]
            w = by_pattern.get(tuple(fixed[c] for c in cells), EMPTY)
            a[s.id] = w
            if w is not EMPTY:
                weight += private[(s.id, w)]
        for sc, ch in zip(shared, combo):
            if a[sc.hslot] is not EMPTY or a[sc.vslot] is not EMPTY:
                weight += wt[ch]
        acc.offer(weight, assignment_key(instance, a), a)
    return acc.result(idx + 1)


def solve_enum_reuse(instance: Instance, budget: Optional[int] = None, jobs: int = 1) -> SolveResult:
    """Try every letter on every shared cell; fill slots greedily."""
    if not instance.reuse:
        raise PreconditionViolated("solve_enum_reuse needs reuse = true")
    budget = default_budget() if budget is None else budget
    total = len(instance.alphabet) ** len(instance.grid.shared)
    if total > budget:
        raise BudgetExceeded(f"{total} letter combinations exceed budget {budget}")
    parts = _run(_enum_reuse_part, instance, None, jobs)
    return _reduce(parts, instance, "enum", {"shared": len(instance.grid.shared)})


def _covered_by(instance: Instance, filled: set) -> list:
    return [sc for sc in instance.grid.shared if sc.hslot in filled or sc.vslot in filled]


def _noreuse_total(instance: Instance) -> int:
    slots = [s.id for s in instance.grid.slots]
    ell = len(instance.alphabet)
    total = 0
    for mask in range(1 << len(slots)):
        filled = {slots[i] for i in range(len(slots)) if mask >> i & 1}
        total += ell ** len(_covered_by(instance, filled))
    return total


def _enum_noreuse_part(instance: Instance, _arg, residue: int, stride: int) -> dict:
    slots = [s.id for s in instance.grid.slots]
    wt = instance.alphabet.weights
    words = instance.dictionary
    acc = _Best()
    idx = -1
    for mask in range(1 << len(slots)):
        filled = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        cov = _covered_by(instance, set(filled))
        cov_cells = [sc.cell for sc in cov]
        # F containing a slot that fits no word can never be saturated
        hopeless = any(not instance.candidates[s] for s in filled) or len(filled) > len(words)
        for combo in product(instance.alphabet.letters, repeat=len(cov)):
            idx += 1
            if idx % stride != residue or hopeless:
                continue
            acc.evaluated += 1
            fixed = dict(zip(cov_cells, combo))
            edges = {}
            for s in filled:
                for w in _consistent(instance, s, {c: fixed[c] for c in
                                                   (sc.cell for sc in instance.grid.shared_of(s))}):
                    edges[(s, w)] = _private_weight(instance, s, w)
            m = max_weight_saturating_matching(edges, filled, left=filled)
            if m is None:
                continue
            value = sum(edges[e] for e in m.items()) + sum(wt[ch] for ch in combo)
            a = {s: m.get(s, EMPTY) for s in slots}
            acc.offer(value, assignment_key(instance, a), a)
    return acc.result(idx + 1)


def solve_enum_noreuse(instance: Instance, budget: Optional[int] = None, jobs: int = 1) -> SolveResult:
    """Enumerate the filled-slot set F and the letters on cells F covers.

    Slots outside F stay empty and every slot of F must be matched, which
    makes the matching value equal to the true weight of the fill.
    """
    if instance.reuse:
        raise PreconditionViolated("solve_enum_noreuse needs reuse = false")
    budget = default_budget() if budget is None else budget
    if len(instance.grid.slots) > 40:
        raise BudgetExceeded("too many slots for filled-set enumeration")
    total = _noreuse_total(instance)
    if total > budget:
        raise BudgetExceeded(f"{total} candidates exceed budget {budget}")
    parts = _run(_enum_noreuse_part, instance, None, jobs)
    return _reduce(parts, instance, "enum", {"shared": len(instance.grid.shared)})


def solve_enum(instance: Instance, budget: Optional[int] = None, jobs: int = 1) -> SolveResult:
    if instance.reuse:
        return solve_enum_reuse(instance, budget, jobs)
    return solve_enum_noreuse(instance, budget, jobs)


# ----------------------------------------------------------- prefilled


def _check_prefilled(instance: Instance):
    missing = [sc.cell for sc in instance.grid.shared if sc.cell not in instance.prefills]
    if missing:
        raise PreconditionViolated(f"shared cells not pre-filled: {missing}")


def solve_prefilled_reuse(instance: Instance) -> SolveResult:
    if not instance.reuse:
        raise PreconditionViolated("solve_prefilled_reuse needs reuse = true")
    _check_prefilled(instance)
    a = {s.id: _greedy(instance, s.id, {}) for s in instance.grid.slots}
    return _finish(instance, a, "prefilled", {"candidates": 1})


def solve_prefilled_noreuse(instance: Instance, budget: Optional[int] = None) -> SolveResult:
    """Shared cells fixed, no reuse: max-weight matching of slots to words.

    Edge weight is the word weight minus the fixed shared letters. The
    recovered fill is optimal when it covers every weighted shared cell;
    otherwise the filled subset of crossing slots is enumerated so that
    uncovered shared cells never score.
    """
    if instance.reuse:
        raise PreconditionViolated("solve_prefilled_noreuse needs reuse = false")
    _check_prefilled(instance)
    budget = default_budget() if budget is None else budget
    grid = instance.grid
    wt = instance.alphabet.weights
    edges = {(s.id, w): _private_weight(instance, s.id, w)
             for s in grid.slots for w in instance.candidates[s.id]}
    order = [s.id for s in grid.slots]
    m0 = max_weight_matching(edges, left=order)
    a0 = {s: m0.get(s, EMPTY) for s in order}
    shared_total = sum(wt[instance.prefills[sc.cell]] for sc in grid.shared)
    upper = sum(edges[e] for e in m0.items()) + shared_total
    res0 = _finish(instance, a0, "prefilled", {"candidates": 1})
    if res0.best_weight == upper:
        return res0

    crossing = [s.id for s in grid.slots if grid.shared_of(s.id)]
    isolated = [s.id for s in grid.slots if not grid.shared_of(s.id)]
    if (1 << len(crossing)) > budget:
        raise BudgetExceeded(f"2^{len(crossing)} filled sets exceed budget {budget}")
    best = None
    count = 1
    for mask in range(1 << len(crossing)):
        filled = [crossing[i] for i in range(len(crossing)) if mask >> i & 1]
        count += 1
        left = [s for s in order if s in set(filled) or s in isolated]
        sub = {e: w for e, w in edges.items() if e[0] in left}
        m = max_weight_saturating_matching(sub, filled, left=left)
        if m is None:
            continue
        value = sum(sub[e] for e in m.items()) + sum(
            wt[instance.prefills[sc.cell]] for sc in _covered_by(instance, set(filled)))
        a = {s: m.get(s, EMPTY) for s in order}
        if _better(value, assignment_key(instance, a), best):
            best = (value, assignment_key(instance, a), a)
    return _finish(instance, best[2], "prefilled", {"candidates": count})


def solve_prefilled(instance: Instance, budget: Optional[int] = None, jobs: int = 1) -> SolveResult:
    if instance.reuse:
        return solve_prefilled_reuse(instance)
    return solve_prefilled_noreuse(instance, budget)


def all_shared_prefilled(instance: Instance) -> bool:
    return all(sc.cell in instance.prefills for sc in instance.grid.shared)


# --------------------------------------------------------- vertex cover


def _cover_tuples(instance: Instance, cover: list[str]):
    """Consistent (word | EMPTY) tuples on the cover slots, in key order."""
    grid = instance.grid
    words = instance.dictionary
    letter: dict = {}
    used: set = set()
    cur: list = []

    def rec(i):
        if i == len(cover):
            yield list(cur)
            return
        s = grid.by_id[cover[i]]
        cells = s.cells()
        for w in instance.candidates[s.id]:
            if not instance.reuse and w in used:
                continue
            word = words[w]
            if any(letter.get(c, ch) != ch for c, ch in zip(cells, word)):
                continue
            added = [c for c in cells if c not in letter]
            for c in added:
                letter[c] = word[s.position(c) - 1]
            used.add(w)
            cur.append(w)
            yield from rec(i + 1)
            cur.pop()
            used.discard(w)
            for c in added:
                del letter[c]
        cur.append(EMPTY)
        yield from rec(i + 1)
        cur.pop()

    yield from rec(0)


def complete_residual(instance: Instance, partial: Mapping[str, Optional[int]], residual: list[str]) -> dict:
    """Fill `residual` (pairwise non-crossing) optimally around `partial`.

    Reuse: heaviest consistent word per slot. No reuse: max-weight matching
    over unused words, with each edge weighted by the word weight minus the
    letters already written by filled crossing slots.
    """
    grid = instance.grid
    words = instance.dictionary
    wt = instance.alphabet.weights
    imposed: dict = {}
    for sid, w in partial.items():
        if w is not EMPTY:
            for c, ch in zip(grid.by_id[sid].cells(), words[w]):
                imposed[c] = ch
    a = dict(partial)
    if instance.reuse:
        for r in residual:
            fixed = {sc.cell: imposed[sc.cell] for sc in grid.shared_of(r) if sc.cell in imposed}
            a[r] = _greedy(instance, r, fixed)
        return a
    used = {w for w in partial.values() if w is not EMPTY}
    edges = {}
    for r in residual:
        fixed = {sc.cell: imposed[sc.cell] for sc in grid.shared_of(r) if sc.cell in imposed}
        reduction = sum(wt[ch] for ch in fixed.values())
        for w in _consistent(instance, r, fixed):
            if w not in used:
                edges[(r, w)] = instance.word_weights[w] - reduction
    m = max_weight_matching(edges, left=residual)
    for r in residual:
        a[r] = m.get(r, EMPTY)
    return a


def _vc_part(instance: Instance, arg, residue: int, stride: int) -> dict:
    cover, budget = arg
    residual = [s.id for s in instance.grid.slots if s.id not in set(cover)]
    acc = _Best()
    idx = -1
    for idx, tup in enumerate(_cover_tuples(instance, cover)):
        if idx >= budget:
            raise BudgetExceeded(f"vertex-cover enumeration exceeded {budget} candidates")
        if idx % stride != residue:
            continue
        acc.evaluated += 1
        a = complete_residual(instance, dict(zip(cover, tup)), residual)
        ev = evaluate(instance, a)
        if ev.valid:
            acc.offer(ev.weight, assignment_key(instance, a), a)
    return acc.result(idx + 1)


def solve_vertex_cover(instance: Instance, cover: Optional[Iterable[str]] = None,
                       budget: Optional[int] = None, jobs: int = 1) -> SolveResult:
    """Enumerate words on a vertex cover; the rest is an independent set."""
    g = grid_graph(instance.grid)
    if cover is None:
        cover = classify_graph(g).vertex_cover_hint
    cover = sorted(set(cover))
    for sid in cover:
        instance.grid.slot(sid)
    if not g.is_cover(cover):
        raise NotAVertexCover(f"{cover} does not cover every crossing")
    budget = default_budget() if budget is None else budget
    parts = _run(_vc_part, instance, (cover, budget), jobs)
    return _reduce(parts, instance, "vc", {"cover": len(cover)})


# ------------------------------------------------------- complete fills


def find_complete_fill(instance: Instance, budget: Optional[int] = None) -> tuple[Optional[dict], dict]:
    """Backtracking search for an assignment that fills every slot.

    Most-constrained slot first, forward checking on crossing slots, and in
    no-reuse mode a matching test that every open slot can still get its own
    word. Slots without crossings are settled at the end by one matching.
    """
    budget = default_budget() if budget is None else budget
    grid = instance.grid
    words = instance.dictionary
    slots = [s.id for s in grid.slots]
    nbrs = {s: [(sc.other(s), sc.cell) for sc in grid.shared_of(s)] for s in slots}
    isolated = [s for s in slots if not nbrs[s]]
    crossing = [s for s in slots if nbrs[s]]
    pos = {s: {sc.cell: sc.pos_in(s) - 1 for sc in grid.shared_of(s)} for s in slots}
    assigned: dict[str, int] = {}
    used: set = set()
    nodes = 0

    def domain(s):
        checks = []
        for t, cell in nbrs[s]:
            if t in assigned:
                checks.append((pos[s][cell], words[assigned[t]][pos[t][cell]]))
        return [w for w in instance.candidates[s]
                if (instance.reuse or w not in used) and all(words[w][p] == ch for p, ch in checks)]

    def open_slots_ok(open_slots):
        doms = {s: domain(s) for s in open_slots}
        if any(not d for d in doms.values()):
            return None
        if not instance.reuse and not saturates(doms, open_slots):
            return None
        return doms

    def rec():
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"complete-fill search exceeded {budget} nodes")
        open_crossing = [s for s in crossing if s not in assigned]
        doms = open_slots_ok(open_crossing + isolated)
        if doms is None:
            return False
        if not open_crossing:
            if instance.reuse:
                for s in isolated:
                    assigned[s] = doms[s][0]
            else:
                edges = {(s, w): 0 for s in isolated for w in doms[s]}
                m = max_weight_saturating_matching(edges, isolated, left=isolated)
                if m is None:
                    return False
                assigned.update(m)
            return True
        s = min(open_crossing, key=lambda x: len(doms[x]))
        for w in doms[s]:
            assigned[s] = w
            used.add(w)
            if rec():
                return True
            del assigned[s]
            used.discard(w)
        return False

    found = rec()
    stats = {"nodes": nodes, "candidates": nodes}
    if not found:
        return None, stats
    return normalize(instance, assigned), stats


def decide(instance: Instance, algo: str = "search", budget: Optional[int] = None, jobs: int = 1) -> bool:
    """Can every slot receive a word?

    ``search`` runs the complete-fill search. Any CP-Opt solver name runs
    that solver with all letter weights set to 1: an optimum below the cell
    count rules out a complete fill, a complete optimum proves one, and the
    remaining corner case (all cells covered without filling every slot) is
    settled by the search.
    """
    return decide_with_witness(instance, algo, budget, jobs)[0] is not None


def decide_with_witness(instance: Instance, algo: str = "search", budget: Optional[int] = None,
                        jobs: int = 1) -> tuple[Optional[dict], dict]:
    if algo == "search":
        return find_complete_fill(instance, budget)
    unit = instance.with_alphabet(instance.alphabet.unit())
    res = solve(unit, algo, budget=budget, jobs=jobs)
    stats = dict(res.stats)
    if res.best_weight < instance.total_cells():
        return None, stats
    if all(w is not EMPTY for w in res.best_assignment.values()):
        return res.best_assignment, stats
    a, more = find_complete_fill(instance, budget)
    stats["fallback_nodes"] = more["nodes"]
    return a, stats


# ------------------------------------------------------------- dispatch

ALGOS = ("oracle", "enum", "vc", "treewidth", "prefilled")


def choose_algo(instance: Instance, budget: Optional[int] = None, width_threshold: int = 3) -> str:
    """Cheapest applicable exact solver, by predicted candidate count."""
    from .treewidth import tree_decomposition

    budget = default_budget() if budget is None else budget
    m = len(instance.dictionary)
    if all_shared_prefilled(instance) and (instance.reuse or not instance.grid.shared):
        return "prefilled"
    if all_shared_prefilled(instance):
        crossing = sum(1 for s in instance.grid.slots if instance.grid.shared_of(s.id))
        if crossing <= 20:
            return "prefilled"
    g = grid_graph(instance.grid)
    if instance.reuse:
        width = tree_decomposition(g, "minfill").width
        if width <= width_threshold and (m + 1) ** (width + 1) <= budget:
            return "treewidth"
    cover = classify_graph(g).vertex_cover_hint
    if (m + 1) ** len(cover) <= budget:
        return "vc"
    ell, shared = len(instance.alphabet), len(instance.grid.shared)
    if instance.reuse and ell ** shared <= budget:
        return "enum"
    if not instance.reuse and len(instance.grid.slots) <= 40 and (2 ** len(instance.grid.slots)) * ell ** shared <= budget:
        return "enum"
    return "oracle"


def solve(instance: Instance, algo: str = "auto", budget: Optional[int] = None, jobs: int = 1,
          cover: Optional[Iterable[str]] = None) -> SolveResult:
    if algo == "auto":
        algo = choose_algo(instance, budget)
    if algo == "oracle":
        return oracle(instance, budget)
    if algo == "enum":
        return solve_enum(instance, budget, jobs)
    if algo == "vc":
        return solve_vertex_cover(instance, cover, budget, jobs)
    if algo == "prefilled":
        return solve_prefilled(instance, budget)
    if algo == "treewidth":
        from .treewidth import solve_treewidth

        return solve_treewidth(instance, budget=budget)
    raise ValueError(f"unknown algorithm {algo!r}")
