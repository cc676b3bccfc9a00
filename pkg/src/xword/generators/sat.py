"""SAT preprocessing and the exactly-1 (3,2)-SAT -> CP-Dec construction.

The crossword uses letters 1, 2, 3 (standing for s1, s2, s3), no reuse, and a
grid made only of T shapes: a horizontal slot met by the first cell of one
vertical slot, so the grid graph is a perfect matching.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping, Optional

from ..core import H, V, Slot
from .base import (
    GeneratedInstance,
    MalformedWitness,
    NotRestrictedForm,
    WitnessRejected,
    build,
    checked,
    counter_word,
)
from .inputs import CnfFormula

S1, S2, S3 = "1", "2", "3"
LETTERS = S1 + S2 + S3


def restrict_sat(f: CnfFormula) -> CnfFormula:
    """Cap occurrences at 3: a variable used k > 3 times becomes k fresh
    variables tied together by the cycle (-x1 | x2), (-x2 | x3), ..., (-xk | x1).

    Preserves both exactly-1 and ordinary satisfiability.
    """
    occ = f.occurrences()
    nv = f.nvars
    fresh: dict[int, list[int]] = {}
    for v in range(1, f.nvars + 1):
        if occ[v] > 3:
            fresh[v] = list(range(nv + 1, nv + occ[v] + 1))
            nv += occ[v]
    if not fresh:
        return f
    used = {v: 0 for v in fresh}
    clauses = []
    for c in f.clauses:
        out = []
        for lit in c:
            v = abs(lit)
            if v in fresh:
                nvar = fresh[v][used[v]]
                used[v] += 1
                out.append(nvar if lit > 0 else -nvar)
            else:
                out.append(lit)
        clauses.append(tuple(out))
    for v, xs in fresh.items():
        for a, b in zip(xs, xs[1:] + xs[:1]):
            clauses.append((-a, b))
    return CnfFormula(nv, tuple(clauses))


def restrict_map(f: CnfFormula) -> dict[int, list[int]]:
    """Original variable -> the fresh variables replacing it in restrict_sat(f)."""
    occ = f.occurrences()
    nv, out = f.nvars, {}
    for v in range(1, f.nvars + 1):
        if occ[v] > 3:
            out[v] = list(range(nv + 1, nv + occ[v] + 1))
            nv += occ[v]
    return out


def _true(lit: int, a: Mapping[int, bool]) -> bool:
    return a[abs(lit)] == (lit > 0)


def exactly1_satisfies(f: CnfFormula, a: Mapping[int, bool]) -> bool:
    return all(sum(_true(l, a) for l in c) == 1 for c in f.clauses)


def satisfies(f: CnfFormula, a: Mapping[int, bool]) -> bool:
    return all(any(_true(l, a) for l in c) for c in f.clauses)


def _assignments(nvars: int):
    for bits in product((False, True), repeat=nvars):
        yield dict(zip(range(1, nvars + 1), bits))


def brute_exactly1(f: CnfFormula) -> Optional[dict[int, bool]]:
    return next((a for a in _assignments(f.nvars) if exactly1_satisfies(f, a)), None)


def brute_sat(f: CnfFormula) -> Optional[dict[int, bool]]:
    return next((a for a in _assignments(f.nvars) if satisfies(f, a)), None)


def check_restricted(f: CnfFormula):
    for j, c in enumerate(f.clauses, 1):
        if len(c) not in (2, 3):
            raise NotRestrictedForm(f"clause {j} has {len(c)} literals, need 2 or 3")
        if len({abs(l) for l in c}) != len(c):
            raise NotRestrictedForm(f"clause {j} repeats a variable")
    for v, k in f.occurrences().items():
        if k > 3:
            raise NotRestrictedForm(f"variable {v} occurs {k} times, at most 3 allowed")


def _fill(first: str, last: Optional[str], length: int) -> str:
    middle = S3 * (length - 2 if last else length - 1)
    return first + middle + (last or "")


def gen_from_x1sat(f: CnfFormula) -> GeneratedInstance:
    check_restricted(f)
    n, m = f.nvars, len(f.clauses)
    occ = f.occurrences()
    # literal (j, t) is the k-th occurrence of variable i
    literals = []
    seen = {v: 0 for v in range(1, n + 1)}
    for j, c in enumerate(f.clauses, 1):
        for lit in c:
            i = abs(lit)
            seen[i] += 1
            literals.append((j, i, seen[i], lit > 0))
    words = []
    for i in range(1, n + 1):
        a = occ[i]
        for k in range(1, a + 1):
            pos = next(p for (j, ii, kk, p) in literals if ii == i and kk == k)
            L = m + n + 3 * i + k
            kp = k + 1 if k < a else 1
            first_t, first_f = (S1, S2) if pos else (S2, S1)
            words.append(_fill(first_t, LETTERS[k - 1], L))
            words.append(_fill(first_f, LETTERS[kp - 1], L))
            words.append(_fill(LETTERS[k - 1], None, m + i + 1))
    for j, c in enumerate(f.clauses, 1):
        words.append(S2 + counter_word(0, j, LETTERS))
        words.extend(S1 + counter_word(t, j, LETTERS) for t in range(len(c) - 1))
    slots = []
    names = {}
    row = 1
    t = 0
    for j, i, k, _ in literals:
        L = m + n + 3 * i + k
        for kind, vlen in ((1, m + i + 1), (2, j + 1)):
            t += 1
            hid, vid = f"T{t:03d}h", f"T{t:03d}v"
            slots.append(Slot(hid, H, row, 1, L))
            col = L if kind == 1 else 1
            slots.append(Slot(vid, V, row, col, vlen))
            names[(j, i, k, kind)] = (hid, vid)
            row += vlen + 1
    inst = build(slots, LETTERS, words, reuse=False)
    params = {"variables": n, "clauses": m, "literals": len(literals)}
    data = {"formula": f, "literals": literals, "names": names}
    return GeneratedInstance(inst, "x1sat", params, "exactly-1 truth assignment", data)


def witness_x1sat(gen: GeneratedInstance, witness: Mapping[int, bool]) -> dict:
    f: CnfFormula = gen.data["formula"]
    if set(witness) != set(range(1, f.nvars + 1)):
        raise MalformedWitness(f"need a value for each of the {f.nvars} variables")
    n, m = f.nvars, len(f.clauses)
    inst = gen.instance
    lits = gen.data["literals"]
    occ = f.occurrences()
    words: dict = {}
    for j, i, k, pos in lits:
        h1, v1 = gen.data["names"][(j, i, k, 1)]
        h2, v2 = gen.data["names"][(j, i, k, 2)]
        L = m + n + 3 * i + k
        a = occ[i]
        kp = k + 1 if k < a else 1
        first_t, first_f = (S1, S2) if pos else (S2, S1)
        dt, df = _fill(first_t, LETTERS[k - 1], L), _fill(first_f, LETTERS[kp - 1], L)
        if witness[i]:
            words[h1], words[h2] = dt, df
        else:
            words[h1], words[h2] = df, dt
        # the vertical of type 1 takes the d_{i,k'} starting with the last letter above
        last = words[h1][-1]
        words[v1] = _fill(last, None, m + i + 1)
    for j, c in enumerate(f.clauses, 1):
        pool_s1 = iter(S1 + counter_word(t, j, LETTERS) for t in range(len(c) - 1))
        s2_word = S2 + counter_word(0, j, LETTERS)
        for jj, i, k, _ in lits:
            if jj != j:
                continue
            h2, v2 = gen.data["names"][(j, i, k, 2)]
            if words[h2][0] == S2:
                words[v2] = s2_word
            else:
                words[v2] = next(pool_s1, None)
    if any(w is None for w in words.values()):
        raise WitnessRejected("a clause has no true literal")
    return checked(gen, words)
