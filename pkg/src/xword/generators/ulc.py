"""Unique Label Cover -> CP-Opt gap instance.

n horizontal and n vertical slots on an N x N square, N = 4n + n^2; every
horizontal crosses every vertical at (2i, 2j). Vertex v_i is written as a
pair of words, one per slot i of each orientation.
"""

from __future__ import annotations

import random
import string
from typing import Mapping

from ..core import H, V, Slot
from .base import GeneratedInstance, GeneratorError, MalformedWitness, WitnessRejected, build, checked
from .inputs import UlcInstance

STAR = "*"
LABELS = string.digits[1:] + string.ascii_uppercase + string.ascii_lowercase


def label(a: int) -> str:
    if not 1 <= a <= len(LABELS):
        raise GeneratorError(f"label {a} outside 1..{len(LABELS)}")
    return LABELS[a - 1]


def _neighbors(u: UlcInstance, i: int) -> list[int]:
    return sorted({b for a, b in u.constraints if a == i} | {a for a, b in u.constraints if b == i})


def _partner(u: UlcInstance, i: int, j: int, alpha: int) -> int:
    """Label of v_i satisfying the (i, j) constraint when v_j has label alpha."""
    if i < j:
        return u.constraints[(i, j)].index(alpha) + 1
    return u.constraints[(j, i)][alpha - 1]


def h_word(u: UlcInstance, i: int, alpha: int) -> str:
    n = u.n
    letters = [STAR] * (2 * n + n * n + i)
    letters[2 * i - 1] = label(alpha)
    for j in _neighbors(u, i):
        letters[2 * j - 1] = label(alpha)
    return "".join(letters)


def v_word(u: UlcInstance, j: int, alpha: int) -> str:
    n = u.n
    letters = [STAR] * (3 * n + n * n + j)
    letters[2 * j - 1] = label(alpha)
    for i in _neighbors(u, j):
        letters[2 * i - 1] = label(_partner(u, i, j, alpha))
    return "".join(letters)


def gen_from_ulc(u: UlcInstance) -> GeneratedInstance:
    n, R = u.n, u.R
    if R > len(LABELS):
        raise GeneratorError(f"at most {len(LABELS)} labels supported")
    slots = [Slot(f"H{i:03d}", H, 2 * i, 1, 2 * n + n * n + i) for i in range(1, n + 1)]
    slots += [Slot(f"V{j:03d}", V, 1, 2 * j, 3 * n + n * n + j) for j in range(1, n + 1)]
    words = [h_word(u, i, a) for i in range(1, n + 1) for a in range(1, R + 1)]
    words += [v_word(u, j, a) for j in range(1, n + 1) for a in range(1, R + 1)]
    letters = "".join(label(a) for a in range(1, R + 1)) + STAR
    inst = build(slots, letters, words, reuse=False)
    params = {"n": n, "R": R, "edges": len(u.constraints), "side": 4 * n + n * n}
    return GeneratedInstance(inst, "ulc", params, "labels on a vertex subset", {"ulc": u})


def witness_ulc(gen: GeneratedInstance, witness: Mapping[int, int]) -> dict:
    """Place both words of every labelled vertex; other slots stay empty."""
    u: UlcInstance = gen.data["ulc"]
    for v, a in witness.items():
        if not (isinstance(v, int) and 1 <= v <= u.n and isinstance(a, int) and 1 <= a <= u.R):
            raise MalformedWitness(f"bad label {v}={a}")
    for (i, j), pi in sorted(u.constraints.items()):
        if i in witness and j in witness and pi[witness[i] - 1] != witness[j]:
            raise WitnessRejected(f"constraint ({i},{j}) violated", cell=(2 * i, 2 * j))
    words = {}
    for v, a in sorted(witness.items()):
        words[f"H{v:03d}"] = h_word(u, v, a)
        words[f"V{v:03d}"] = v_word(u, v, a)
    return checked(gen, words)


def planted_ulc(n: int, R: int, edge_prob: float = 0.5, seed: int = 0) -> tuple[UlcInstance, dict[int, int]]:
    """Random ULC instance with a hidden labelling satisfying every edge."""
    rng = random.Random(seed)
    labels = {v: rng.randint(1, R) for v in range(1, n + 1)}
    cons = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < edge_prob:
                pi = list(range(1, R + 1))
                rng.shuffle(pi)
                # force pi(labels[i]) = labels[j]
                at = pi.index(labels[j])
                pi[at], pi[labels[i] - 1] = pi[labels[i] - 1], pi[at]
                cons[(i, j)] = tuple(pi)
    return UlcInstance(n, R, cons), labels
