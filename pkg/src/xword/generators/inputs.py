"""Side-input formats for the generators.

* integer list, one per line (3-Partition)
* DIMACS CNF: ``p cnf <vars> <clauses>`` then 0-terminated clauses
* edge list: ``e <u> <v>`` lines, optional ``v <u>`` and ``k <int>`` lines
* ULC: ``ulc <n> <R>``, then per edge ``edge <u> <v>`` followed by R lines
  ``<a> <b>`` meaning label a of u forces label b of v (vertices 1..n, u < v)

Lines starting with ``#`` (or ``c`` in DIMACS) are comments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..io import ParseError


def _lines(text: str, comment: tuple[str, ...] = ("#",)):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        yield no, line.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected integer, got {tok!r}", line=no) from None


def parse_int_list(text: str) -> list[int]:
    out = []
    for no, toks in _lines(text):
        if len(toks) != 1:
            raise ParseError("expected one integer per line", line=no)
        out.append(_int(toks[0], no))
    return out


def write_int_list(xs) -> str:
    return "".join(f"{x}\n" for x in xs)


@dataclass(frozen=True)
class CnfFormula:
    nvars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for c in self.clauses:
            if not c:
                raise ValueError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.nvars:
                    raise ValueError(f"literal {lit} out of range 1..{self.nvars}")

    def occurrences(self) -> dict[int, int]:
        occ = {v: 0 for v in range(1, self.nvars + 1)}
        for c in self.clauses:
            for lit in c:
                occ[abs(lit)] += 1
        return occ


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    clauses: list[tuple[int, ...]] = []
    cur: list[int] = []
    for no, toks in _lines(text, ("c", "#", "%")):
        if toks[0] == "p":
            if header is not None or len(toks) != 4 or toks[1] != "cnf":
                raise ParseError("expected: p cnf <vars> <clauses>", line=no)
            header = (_int(toks[2], no), _int(toks[3], no))
            continue
        if header is None:
            raise ParseError("clause before the p line", line=no)
        for t in toks:
            lit = _int(t, no)
            if lit == 0:
                if not cur:
                    raise ParseError("empty clause", line=no)
                clauses.append(tuple(cur))
                cur = []
            elif abs(lit) > header[0]:
                raise ParseError(f"literal {lit} exceeds {header[0]} variables", line=no)
            else:
                cur.append(lit)
    if header is None:
        raise ParseError("missing p line", line=1)
    if cur:
        clauses.append(tuple(cur))
    if len(clauses) != header[1]:
        raise ParseError(f"header promises {header[1]} clauses, found {len(clauses)}", line=1)
    return CnfFormula(header[0], tuple(clauses))


def write_dimacs(f: CnfFormula) -> str:
    out = [f"p cnf {f.nvars} {len(f.clauses)}"]
    out.extend(" ".join(map(str, c)) + " 0" for c in f.clauses)
    return "\n".join(out) + "\n"


@dataclass
class Graph:
    vertices: list[str]
    edges: list[tuple[str, str]]
    k: Optional[int] = None

    def degree(self, v: str) -> int:
        return sum(v in e for e in self.edges)


def parse_graph(text: str) -> Graph:
    vertices: dict[str, None] = {}
    edges: list[tuple[str, str]] = []
    seen: set = set()
    k = None
    for no, toks in _lines(text):
        if toks[0] == "e" and len(toks) == 3:
            u, v = toks[1], toks[2]
            if u == v:
                raise ParseError("self-loops are not allowed", line=no)
            key = frozenset((u, v))
            if key in seen:
                raise ParseError(f"duplicate edge {u} {v}", line=no)
            seen.add(key)
            vertices.setdefault(u)
            vertices.setdefault(v)
            edges.append((u, v))
        elif toks[0] == "v" and len(toks) == 2:
            vertices.setdefault(toks[1])
        elif toks[0] == "k" and len(toks) == 2:
            k = _int(toks[1], no)
        else:
            raise ParseError("expected: e <u> <v> | v <u> | k <int>", line=no)
    return Graph(list(vertices), edges, k)


def write_graph(g: Graph) -> str:
    out = [f"v {v}" for v in g.vertices if g.degree(v) == 0]
    out.extend(f"e {u} {v}" for u, v in g.edges)
    if g.k is not None:
        out.append(f"k {g.k}")
    return "\n".join(out) + "\n"


@dataclass
class UlcInstance:
    n: int
    R: int
    # (u, v) with u < v -> pi, where pi[a-1] is the label of v forced by label a of u
    constraints: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1 or self.R < 1:
            raise ValueError("ULC needs n >= 1 and R >= 1")
        for (u, v), pi in self.constraints.items():
            if not 1 <= u < v <= self.n:
                raise ValueError(f"edge ({u},{v}) must satisfy 1 <= u < v <= n")
            if sorted(pi) != list(range(1, self.R + 1)):
                raise ValueError(f"constraint on ({u},{v}) is not a permutation of 1..{self.R}")

    def satisfied(self, labels: dict[int, int]) -> bool:
        return all(pi[labels[u] - 1] == labels[v] for (u, v), pi in self.constraints.items()
                   if u in labels and v in labels)


def parse_ulc(text: str) -> UlcInstance:
    it = iter(_lines(text))
    try:
        no, toks = next(it)
    except StopIteration:
        raise ParseError("missing ulc header", line=1) from None
    if toks[0] != "ulc" or len(toks) != 3:
        raise ParseError("expected: ulc <n> <R>", line=no)
    n, R = _int(toks[1], no), _int(toks[2], no)
    cons: dict[tuple[int, int], tuple[int, ...]] = {}
    for no, toks in it:
        if toks[0] != "edge" or len(toks) != 3:
            raise ParseError("expected: edge <u> <v>", line=no)
        u, v = _int(toks[1], no), _int(toks[2], no)
        pi = [0] * R
        for _ in range(R):
            try:
                no2, row = next(it)
            except StopIteration:
                raise ParseError(f"edge {u} {v} needs {R} label lines", line=no) from None
            if len(row) != 2:
                raise ParseError("expected: <a> <b>", line=no2)
            a, b = _int(row[0], no2), _int(row[1], no2)
            if not 1 <= a <= R or not 1 <= b <= R or pi[a - 1]:
                raise ParseError(f"bad label pair {a} {b}", line=no2)
            pi[a - 1] = b
        if (u, v) in cons:
            raise ParseError(f"duplicate edge {u} {v}", line=no)
        cons[(u, v)] = tuple(pi)
    try:
        return UlcInstance(n, R, cons)
    except ValueError as e:
        raise ParseError(str(e), line=1) from None


def write_ulc(u: UlcInstance) -> str:
    out = [f"ulc {u.n} {u.R}"]
    for (a, b), pi in sorted(u.constraints.items()):
        out.append(f"edge {a} {b}")
        out.extend(f"{x} {y}" for x, y in enumerate(pi, 1))
    return "\n".join(out) + "\n"
