"""3-Partition -> CP-Dec without reuse on a union of stars, letters * and !."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from ..core import H, V, Slot
from .base import (
    BadSum,
    GeneratedInstance,
    MalformedWitness,
    NotEnoughTriples,
    WitnessRejected,
    build,
    checked,
    counter_word,
)

STAR, BANG = "*", "!"


def normalize_input(xs: Iterable[int], shift: Optional[bool] = None) -> tuple[list[int], int, int]:
    """Validated values (shifted by 6n when needed or asked), n and B."""
    xs = list(xs)
    if not xs or len(xs) % 3:
        raise BadSum(f"need 3n values, got {len(xs)}")
    n = len(xs) // 3
    if any(x <= 0 for x in xs):
        raise BadSum("values must be positive")
    if len(set(xs)) != len(xs):
        raise BadSum("values must be distinct")
    if sum(xs) % n:
        raise BadSum(f"sum {sum(xs)} is not a multiple of n = {n}")
    if shift is None:
        shift = any(x <= 6 * n for x in xs)
    delta = 6 * n if shift else 0
    if any(x + delta <= 6 * n for x in xs):
        raise BadSum(f"values must exceed 6n = {6 * n}; pass shift")
    ys = [x + delta for x in xs]
    return ys, n, sum(ys) // n


def triple_word(n: int, triple: tuple[int, int, int]) -> str:
    letters = [STAR] * (6 * n - 1)
    for i in triple:
        letters[2 * i - 2] = BANG
    return "".join(letters)


def value_words(x: int, n: int) -> list[str]:
    """One word starting with ! and n-1 starting with *, all of length x."""
    return [BANG + counter_word(0, x - 1, STAR + BANG)] + [
        STAR + counter_word(c, x - 1, STAR + BANG) for c in range(n - 1)
    ]


def gen_from_three_partition(xs: Iterable[int], shift: Optional[bool] = None,
                             strict: bool = False) -> GeneratedInstance:
    original = list(xs)
    ys, n, B = normalize_input(original, shift)
    triples = [t for t in combinations(range(1, 3 * n + 1), 3) if sum(ys[i - 1] for i in t) == B]
    f = len(triples)
    params = {"n": n, "B": B, "f": f, "shifted": ys != original}
    if f < n:
        if strict:
            raise NotEnoughTriples(f"only {f} triples sum to {B}, need {n}")
        # canonical unfillable instance: one slot, no words
        inst = build([Slot("H001", H, 1, 1, 2)], STAR + BANG, [], reuse=False)
        params["not_enough_triples"] = True
        return GeneratedInstance(inst, "3partition", params, "n triples of values",
                                 {"values": ys, "original": original, "n": n, "triples": triples,
                                  "interesting": []})
    width = 6 * n - 1
    slots = []
    interesting = []
    for t in range(n):
        col = t * (width + 1) + 1
        sid = f"H{t + 1:03d}"
        slots.append(Slot(sid, H, 1, col, width))
        interesting.append(sid)
        for i, x in enumerate(ys, 1):
            slots.append(Slot(f"V{t + 1:03d}.{i:03d}", V, 1, col + 2 * i - 2, x))
    base = max(ys) + 2
    for r in range(f - n):
        slots.append(Slot(f"H{n + r + 1:03d}", H, base + 2 * r, 1, width))
    words = [w for x in ys for w in value_words(x, n)] + [triple_word(n, t) for t in triples]
    inst = build(slots, STAR + BANG, words, reuse=False)
    data = {"values": ys, "original": original, "n": n, "triples": triples, "interesting": interesting}
    return GeneratedInstance(inst, "3partition", params, "n triples of values", data)


def witness_three_partition(gen: GeneratedInstance, witness) -> dict:
    d = gen.data
    n, original, ys = d["n"], d["original"], d["values"]
    if d["interesting"] == []:
        raise MalformedWitness("instance has no B-sum triples, so no witness can exist")
    try:
        groups = [tuple(sorted(original.index(x) + 1 for x in t)) for t in witness]
    except (ValueError, TypeError):
        raise MalformedWitness("witness values must come from the input") from None
    flat = sorted(i for g in groups for i in g)
    if len(groups) != n or any(len(g) != 3 for g in groups) or flat != list(range(1, 3 * n + 1)):
        raise MalformedWitness(f"expected {n} disjoint triples covering every value")
    triples = d["triples"]
    if any(g not in triples for g in groups):
        raise WitnessRejected("some triple does not reach the target sum")
    words: dict = {}
    rest = [t for t in triples if t not in groups]
    for t, g in enumerate(groups, 1):
        words[f"H{t:03d}"] = triple_word(n, g)
    for r, g in enumerate(rest):
        words[f"H{n + r + 1:03d}"] = triple_word(n, g)
    for i, x in enumerate(ys, 1):
        pool = value_words(x, n)
        stars = iter(pool[1:])
        for t, g in enumerate(groups, 1):
            words[f"V{t:03d}.{i:03d}"] = pool[0] if i in g else next(stars)
    return checked(gen, words)


def has_three_partition(xs: Iterable[int]) -> bool:
    xs = list(xs)
    if not xs or len(xs) % 3 or sum(xs) % (len(xs) // 3):
        return False
    B = sum(xs) // (len(xs) // 3)

    def rec(rest: tuple) -> bool:
        if not rest:
            return True
        a = rest[0]
        for j, k in combinations(range(1, len(rest)), 2):
            if a + rest[j] + rest[k] == B:
                if rec(tuple(x for i, x in enumerate(rest) if i not in (0, j, k))):
                    return True
        return False

    return rec(tuple(xs))
