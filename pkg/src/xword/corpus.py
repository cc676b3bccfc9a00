"""Seeded test and benchmark corpora."""

from __future__ import annotations

import random
import string
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterator, Optional

from .core import H, V, Alphabet, Dictionary, Instance, Slot, validate_grid
from .generators.inputs import CnfFormula, Graph
from .generators.sparse import SparseCnf, sparse_partition
from .io import write_instance


def random_instance(seed: int, reuse: bool, max_slots: int = 6, max_words: int = 8,
                    max_letters: int = 3, max_weight: int = 5, max_shared: int = 6) -> Instance:
    """Small random instance; grids with more than `max_shared` crossings are redrawn."""
    rng = random.Random(seed)
    while True:
        n = rng.randint(1, max_slots)
        h = rng.randint(0, n)
        rows = rng.sample(range(1, 6), min(h, 5))
        cols = rng.sample(range(1, 6), min(n - len(rows), 5))
        slots = []
        for i, r in enumerate(rows, 1):
            length = rng.randint(2, 4)
            slots.append(Slot(f"h{i}", H, r, rng.randint(1, 6 - length + 1), length))
        for j, c in enumerate(cols, 1):
            length = rng.randint(2, 4)
            slots.append(Slot(f"v{j}", V, rng.randint(1, 6 - length + 1), c, length))
        grid = validate_grid(slots)
        if len(grid.shared) <= max_shared:
            break
    letters = string.ascii_lowercase[:rng.randint(1, max_letters)]
    weights = {ch: rng.randint(0, max_weight) for ch in letters}
    lengths = sorted({s.length for s in slots})
    words: dict[str, None] = {}
    for _ in range(rng.randint(1, max_words)):
        L = rng.choice(lengths) if rng.random() < 0.85 else rng.randint(2, 4)
        words.setdefault("".join(rng.choice(letters) for _ in range(L)))
    return Instance(grid, Alphabet(letters, weights), Dictionary(words), {}, reuse)


def random_corpus(count: int, base_seed: int = 0, **kw) -> Iterator[Instance]:
    """`count` instances alternating reuse and no-reuse mode."""
    for i in range(count):
        yield random_instance(base_seed + i, reuse=(i % 2 == 0), **kw)


def full_prefills(instance: Instance, seed: int) -> Instance:
    rng = random.Random(seed)
    letters = instance.alphabet.letters
    return instance.with_prefills({sc.cell: rng.choice(letters) for sc in instance.grid.shared})


def path_instance(m: int, slots: int = 4) -> Instance:
    """Alternating H/V path, consecutive slots crossing at their end cells.

    Every word is 'a' + five bits + 'a', so any two fit together and each DP
    bag holds all (m+1)^2 pairs.
    """
    if not 1 <= m <= 32:
        raise ValueError("path corpus supports 1 <= m <= 32")
    out = []
    r = c = 1
    for t in range(slots):
        if t % 2 == 0:
            out.append(Slot(f"s{t + 1:02d}", H, r, c, 7))
            c += 6
        else:
            out.append(Slot(f"s{t + 1:02d}", V, r, c, 7))
            r += 6
    words = ["a" + format(i, "05b").replace("0", "b").replace("1", "c") + "a" for i in range(m)]
    return Instance(validate_grid(out), Alphabet("abc", {"a": 1, "b": 1, "c": 2}), Dictionary(words), {}, True)


def write_path_corpus(directory: Path, ms=(4, 8, 16, 32)) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for m in ms:
        p = directory / f"path_m{m:02d}.xw"
        p.write_text(write_instance(path_instance(m), [f"path corpus m={m}"]))
        paths.append(p)
    return paths


# ---------------------------------------------------------- decision corpora


def three_partition_corpus() -> list[list[int]]:
    """Yes and no inputs for n = 1, 2, 3 (unshifted; the generator shifts)."""
    out = [[1, 2, 3], [7, 8, 9], [2, 5, 11]]
    rng = random.Random(3)
    for n in (2, 3):
        made = 0
        while made < 4:
            xs = rng.sample(range(1, 12 + 4 * n), 3 * n)
            if sum(xs) % n:
                continue
            out.append(xs)
            made += 1
    # planted yes instances
    out.append([1, 2, 9, 3, 4, 5])
    out.append([1, 5, 9, 2, 6, 7, 3, 4, 8])
    return out


def _isomorphism_classes(nv: int) -> list[list[tuple[int, int]]]:
    pairs = list(combinations(range(nv), 2))
    seen = set()
    out = []
    perms = list(permutations(range(nv)))
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if {v for e in edges for v in e} != set(range(nv)):
            continue
        canon = min(tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges)) for p in perms)
        if canon not in seen:
            seen.add(canon)
            out.append(edges)
    return out


def graph_corpus(max_vertices: int = 5) -> list[tuple[Graph, int]]:
    """Every graph on <= max_vertices without isolated vertices (up to
    isomorphism), paired with each k in 2..|V| where |E| != k."""
    out = []
    for nv in range(2, max_vertices + 1):
        for edges in _isomorphism_classes(nv):
            if len(edges) < 2:
                continue
            g = Graph([str(v + 1) for v in range(nv)], [(str(a + 1), str(b + 1)) for a, b in edges])
            for k in range(2, nv + 1):
                if k != len(edges):
                    out.append((g, k))
    return out


def random_restricted_formula(rng: random.Random, nvars: int, nclauses: int) -> Optional[CnfFormula]:
    occ = {v: 0 for v in range(1, nvars + 1)}
    clauses = []
    for _ in range(nclauses):
        free = [v for v in occ if occ[v] < 3]
        size = rng.choice((2, 3))
        if len(free) < size:
            break
        vs = rng.sample(free, size)
        for v in vs:
            occ[v] += 1
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    if not clauses:
        return None
    return CnfFormula(nvars, tuple(clauses))


def x1sat_corpus() -> list[CnfFormula]:
    rng = random.Random(11)
    out = [CnfFormula(2, ((1, 2),)), CnfFormula(2, ((1, 2), (-1, -2))), CnfFormula(2, ((1, 2), (1, -2)))]
    while len(out) < 24:
        f = random_restricted_formula(rng, rng.randint(2, 4), rng.randint(1, 4))
        if f is not None:
            out.append(f)
    return out


def over_occurring_formulas() -> list[CnfFormula]:
    """Formulas on <= 4 variables with some variable used more than 3 times."""
    return [
        CnfFormula(2, ((1, 2), (1, -2), (-1, 2), (1, 2))),
        CnfFormula(3, ((1, 2, 3), (1, -2), (-1, 3), (1, 2))),
        CnfFormula(3, ((1, 2), (1, 3), (1, -2), (1, -3))),
        CnfFormula(4, ((1, 2, 3), (-1, 4), (1, -4), (1, 2))),
    ]


def random_3cnf(rng: random.Random, nvars: int, nclauses: int) -> CnfFormula:
    clauses = []
    for _ in range(nclauses):
        vs = rng.sample(range(1, nvars + 1), min(nvars, rng.randint(1, 3)))
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return CnfFormula(nvars, tuple(clauses))


def sparse_corpus(per_size: int = 6) -> list[SparseCnf]:
    """Sparse 3-SAT instances with N in {1, 4, 9} from the colouring step."""
    out = [
        # unsatisfiable ones, built by hand
        SparseCnf(4, CnfFormula(1, ((1,), (-1,))), [[1], []], [[0], [1]]),
        SparseCnf(9, CnfFormula(2, ((1, 2), (-1,), (-2,))), [[1], [2], []], [[0], [1], [2]]),
        SparseCnf(9, CnfFormula(3, ((1, 2, 3), (-1,), (-2,), (-3,))), [[1], [2], [3]], [[0, 1], [2], [3]]),
    ]
    rng = random.Random(21)
    for N in (1, 4, 9):
        made, seed = 0, 0
        while made < per_size:
            seed += 1
            nv = rng.randint(1, N)
            nc = rng.randint(1, N)
            f = random_3cnf(rng, nv, nc)
            p = sparse_partition(f, seed=seed, C=1)
            if p.sparse.N != N or not p.sparse.formula.clauses:
                continue
            out.append(p.sparse)
            made += 1
    return out
