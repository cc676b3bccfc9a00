"""Independent Set -> CP-Dec with k horizontal slots and binary letters."""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable

from ..core import H, V, Slot
from .base import (
    EdgeCountEqualsK,
    GeneratedInstance,
    GeneratorError,
    IsolatedVertex,
    MalformedWitness,
    WitnessRejected,
    build,
    checked,
    counter_word,
)
from .inputs import Graph


def vertex_word(g: Graph, v: str) -> str:
    m = len(g.edges)
    letters = ["0"] * (2 * m - 1)
    for i, e in enumerate(g.edges):
        if v in e:
            letters[2 * i] = "1"
    return "".join(letters)


def column_word(k: int, j: int) -> str:
    """1 on row 2j-1 of the column, or all zeros for j = 0."""
    letters = ["0"] * (2 * k - 1)
    if j:
        letters[2 * j - 2] = "1"
    return "".join(letters)


def suffix_length(k: int, m: int) -> int:
    L = max(1, math.ceil(math.log2(m)))
    if 2 * k - 1 + L == 2 * m - 1:
        L += 1  # keep column words from fitting the rows
    return L


def gen_from_independent_set(g: Graph, k: int, noreuse_variant: bool = False,
                             allow_equal: bool = False) -> GeneratedInstance:
    """k rows of length 2|E|-1 and |E| columns of length 2k-1.

    With |E| = k row and column words share a length, so the reduction may
    lose its converse; `allow_equal` builds the instance anyway, merging any
    word that serves both roles.
    """
    m = len(g.edges)
    if m == k and not allow_equal:
        raise EdgeCountEqualsK(f"|E| = k = {k}")
    isolated = [v for v in g.vertices if g.degree(v) == 0]
    if isolated:
        raise IsolatedVertex(f"isolated vertex {isolated[0]}")
    if k < 2 or m < 2:
        raise GeneratorError("need k >= 2 and at least 2 edges (slots have length >= 2)")
    L = suffix_length(k, m) if noreuse_variant else 0
    rows = [Slot(f"R{i:03d}", H, 2 * i - 1, 1, 2 * m - 1) for i in range(1, k + 1)]
    cols = [Slot(f"C{j:03d}", V, 1, 2 * j - 1, 2 * k - 1 + L) for j in range(1, m + 1)]
    words = list(dict.fromkeys(vertex_word(g, v) for v in g.vertices))
    if noreuse_variant:
        words += [column_word(k, j) + counter_word(c, L, "01") for j in range(k + 1) for c in range(m)]
    else:
        words += [column_word(k, j) for j in range(k + 1)]
    words = list(dict.fromkeys(words))
    inst = build(rows + cols, "01", words, reuse=not noreuse_variant)
    params = {"k": k, "vertices": len(g.vertices), "edges": m, "rows": 2 * k - 1 + L,
              "cols": 2 * m - 1, "noreuse_variant": noreuse_variant}
    data = {"graph": g, "k": k, "suffix": L}
    return GeneratedInstance(inst, "indset", params, "set of k distinct vertices", data)


def witness_indset(gen: GeneratedInstance, witness: Iterable[str]) -> dict:
    g, k, L = gen.data["graph"], gen.data["k"], gen.data["suffix"]
    chosen = list(witness)
    if len(chosen) != k or any(v not in g.vertices for v in chosen):
        raise MalformedWitness(f"expected {k} vertices of the graph, got {chosen}")
    words: dict = {}
    for i, v in enumerate(chosen, 1):
        words[f"R{i:03d}"] = vertex_word(g, v)
    for j, e in enumerate(g.edges, 1):
        hits = [i for i, v in enumerate(chosen, 1) if v in e]
        if len(hits) > 1:
            raise WitnessRejected(f"chosen vertices meet edge {e[0]}-{e[1]}",
                                  cell=(2 * hits[1] - 1, 2 * j - 1))
        w = column_word(k, hits[0] if hits else 0)
        if L:
            w += counter_word(j - 1, L, "01")
        words[f"C{j:03d}"] = w
    return checked(gen, words)


def has_independent_set(g: Graph, k: int) -> bool:
    edges = [set(e) for e in g.edges]
    return any(all(not e <= set(c) for e in edges) for c in combinations(g.vertices, k))
