"""Sparse 3-SAT: the random colouring partition and the binary crossword.

A Sparse 3-SAT instance groups variables into V_1..V_K and clauses into
C_1..C_K (K = sqrt(N)) so that each V_i meets the variables of each C_j in at
most one variable. The crossword has one horizontal slot per V_i and one
vertical slot per C_j, all crossing, all of distinct lengths.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Optional

from ..core import H, V, Slot
from ..exact import BudgetExceeded, default_budget
from .base import GeneratedInstance, GeneratorError, MalformedWitness, WitnessRejected, build, checked
from .inputs import CnfFormula
from .sat import restrict_sat, satisfies


@dataclass
class SparseCnf:
    N: int
    formula: CnfFormula
    var_groups: list[list[int]]
    clause_groups: list[list[int]]

    @property
    def K(self) -> int:
        return math.isqrt(self.N)

    def clause_vars(self, j: int) -> list[int]:
        """Sorted variables of the clauses in group j (0-based)."""
        return sorted({abs(l) for c in self.clause_groups[j] for l in self.formula.clauses[c]})

    def variables(self) -> list[int]:
        return sorted(v for g in self.var_groups for v in g)


def check_sparse(s: SparseCnf, sizes: bool = True) -> list[str]:
    """Violated Sparse 3-SAT conditions; empty when valid.

    With ``sizes=False`` only the conditions the crossword construction
    relies on are checked: the group partition and the one-variable meets.
    """
    problems = []
    K = math.isqrt(s.N)
    if K * K != s.N:
        problems.append(f"N = {s.N} is not a perfect square")
    if len(s.var_groups) != K or len(s.clause_groups) != K:
        problems.append(f"need {K} variable and clause groups")
    problems += _partition_problems(s)
    if sizes:
        problems += _size_problems(s, K)
    if len(s.var_groups) == K and len(s.clause_groups) == K:
        for i, g in enumerate(s.var_groups):
            for j in range(K):
                meet = set(g) & set(s.clause_vars(j))
                if len(meet) > 1:
                    problems.append(f"V_{i + 1} meets C_{j + 1} in {sorted(meet)}")
    return problems


def _partition_problems(s: SparseCnf) -> list[str]:
    problems = []
    vs = [v for g in s.var_groups for v in g]
    cs = [c for g in s.clause_groups for c in g]
    if len(set(vs)) != len(vs):
        problems.append("variable groups overlap")
    if sorted(cs) != list(range(len(s.formula.clauses))):
        problems.append("clause groups do not partition the clauses")
    used = {abs(l) for c in s.formula.clauses for l in c}
    if not used <= set(vs):
        problems.append("a clause uses an ungrouped variable")
    return problems


def _size_problems(s: SparseCnf, K: int) -> list[str]:
    problems = []
    if len(s.variables()) > s.N or len(s.formula.clauses) > s.N:
        problems.append("more than N variables or clauses")
    if any(len(g) > K for g in s.var_groups + s.clause_groups):
        problems.append("a group exceeds sqrt(N)")
    if any(len(c) > 3 for c in s.formula.clauses):
        problems.append("a clause has more than 3 literals")
    if any(k > 3 for k in s.formula.occurrences().values()):
        problems.append("a variable occurs more than 3 times")
    return problems


@dataclass
class SparsePartition:
    """Outcome of the colouring step, before and after deletions."""

    source: CnfFormula  # after occurrence reduction
    sparse: SparseCnf  # surviving clauses on surviving variables
    removed_vars: list[int] = field(default_factory=list)
    removed_clauses: list[int] = field(default_factory=list)
    dropped_clauses: list[int] = field(default_factory=list)  # survivors left without literals
    surviving_clauses: list[int] = field(default_factory=list)  # source index per sparse clause
    colors: int = 0
    attempts: int = 0
    seed: int = 0

    @property
    def deleted_fraction(self) -> float:
        total = self.source.nvars + len(self.source.clauses)
        return (len(self.removed_vars) + len(self.removed_clauses)) / total if total else 0.0

    def report(self) -> dict:
        return {
            "N": self.sparse.N,
            "colors": self.colors,
            "attempts": self.attempts,
            "seed": self.seed,
            "removed_vars": self.removed_vars,
            "removed_clauses": self.removed_clauses,
            "deleted_fraction": round(self.deleted_fraction, 6),
        }


def _square_at_least(x: int) -> int:
    r = math.isqrt(max(x, 1))
    return r * r if r * r >= x else (r + 1) ** 2


def sparse_partition(f: CnfFormula, epsilon: float = 0.5, seed: int = 0, C: Optional[float] = None,
                     k: Optional[int] = None, retries: int = 100) -> SparsePartition:
    """Colour the incidence graph randomly and delete until it is sparse.

    Defaults to C = 8/sqrt(epsilon); `k` fixes the number of colours outright.
    Colour classes are capped at sqrt(N0) per side by redrawing, and by
    deleting surplus vertices when `retries` runs out.
    """
    if any(len(c) > 3 for c in f.clauses):
        raise GeneratorError("sparse_partition expects a 3-CNF formula")
    g = restrict_sat(f)
    m = len(g.clauses)
    N0 = _square_at_least(max(g.nvars, m))
    r0 = math.isqrt(N0)
    if k is None:
        c = C if C is not None else 8 / math.sqrt(epsilon)
        k = math.ceil(c) * r0
    rng = random.Random(seed)
    best = None
    attempts = 0
    for attempts in range(1, retries + 1):
        # dummy vertices pad both sides to N0 and take colours too
        vc = [rng.randrange(k) for _ in range(N0)]
        cc = [rng.randrange(k) for _ in range(N0)]
        over = _overflow(vc[:g.nvars], k, r0) + _overflow(cc[:m], k, r0)
        if best is None or over < best[0]:
            best = (over, vc, cc)
        if over == 0:
            break
    _, vc, cc = best
    var_color = {v: vc[v - 1] for v in range(1, g.nvars + 1)}
    clause_color = {j: cc[j] for j in range(m)}
    removed_v: set[int] = set()
    removed_c: set[int] = set()
    for color in range(k):
        members = [v for v in var_color if var_color[v] == color]
        removed_v.update(members[r0:])
        cm = [j for j in clause_color if clause_color[j] == color]
        removed_c.update(cm[r0:])
    classes: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for j, c in enumerate(g.clauses):
        if j in removed_c:
            continue
        for v in sorted({abs(l) for l in c}):
            if v not in removed_v:
                classes.setdefault((var_color[v], clause_color[j]), []).append((v, j))
    for key in sorted(classes):
        edges = classes[key]
        if len(edges) > 1:
            removed_v.update(v for v, _ in edges)
    surv_v = [v for v in range(1, g.nvars + 1) if v not in removed_v]
    clauses, surviving, dropped = [], [], []
    for j, c in enumerate(g.clauses):
        if j in removed_c:
            continue
        kept = tuple(l for l in c if abs(l) not in removed_v)
        if kept:
            clauses.append(kept)
            surviving.append(j)
        else:
            dropped.append(j)
    formula = CnfFormula(g.nvars, tuple(clauses))
    var_groups = [[v for v in surv_v if var_color[v] == i] for i in range(k)]
    clause_groups = [[t for t, j in enumerate(surviving) if clause_color[j] == i] for i in range(k)]
    sparse = SparseCnf(k * k, formula, var_groups, clause_groups)
    return SparsePartition(g, sparse, sorted(removed_v), sorted(removed_c), dropped, surviving,
                           k, attempts, seed)


def _overflow(colors: list[int], k: int, cap: int) -> int:
    counts = [0] * k
    for c in colors:
        counts[c] += 1
    return sum(max(0, x - cap) for x in counts)


def sparse_branches(p: SparsePartition, limit: int = 4096) -> list[SparseCnf]:
    """Sparse formulas on the same groups, one of which is satisfiable iff
    the source is: each removed variable is fixed both ways and each
    removed clause gets one literal made true."""
    g = p.source
    choices = [[(v, True), (v, False)] for v in p.removed_vars]
    choices += [[(abs(l), l > 0) for l in g.clauses[j]] for j in p.removed_clauses]
    total = math.prod(len(c) for c in choices)
    if total > limit:
        raise BudgetExceeded(f"{total} branch formulas exceed limit {limit}")
    color_of = {p.surviving_clauses[t]: i for i, grp in enumerate(p.sparse.clause_groups) for t in grp}
    removed = set(p.removed_clauses)
    out, seen = [], set()
    for combo in product(*choices):
        fixed: dict[int, bool] = {}
        if any(fixed.setdefault(v, b) != b for v, b in combo):
            continue
        clauses = []
        for j, c in enumerate(g.clauses):
            if j in removed or any(fixed.get(abs(l)) == (l > 0) for l in c):
                continue
            rest = tuple(l for l in c if abs(l) not in fixed)
            if not rest:
                break
            clauses.append((j, rest))
        else:
            key = tuple(clauses)
            if key in seen:
                continue
            seen.add(key)
            # an unsatisfied survivor keeps a literal, so it has a colour
            groups = [[t for t, (j, _) in enumerate(clauses) if color_of[j] == i] for i in range(p.colors)]
            var_groups = [[v for v in grp if v not in fixed] for grp in p.sparse.var_groups]
            formula = CnfFormula(g.nvars, tuple(c for _, c in clauses))
            out.append(SparseCnf(p.sparse.N, formula, var_groups, groups))
    return out


def _sigma_letter(value: bool) -> str:
    return "1" if value else "0"


def h_word(s: SparseCnf, i: int, sigma: Mapping[int, bool]) -> str:
    K = s.K
    letters = ["0"] * (2 * K + 2 * (i + 1))
    for j in range(K):
        meet = set(s.var_groups[i]) & set(s.clause_vars(j))
        if meet:
            letters[2 * j] = _sigma_letter(sigma[meet.pop()])
    return "".join(letters)


def v_word(s: SparseCnf, j: int, sigma: Mapping[int, bool]) -> str:
    K = s.K
    letters = ["0"] * (5 * K + 2 * (j + 1))
    cv = set(s.clause_vars(j))
    for i in range(K):
        meet = set(s.var_groups[i]) & cv
        if meet:
            letters[2 * i] = _sigma_letter(sigma[meet.pop()])
    return "".join(letters)


def _sigmas(vs: list[int]):
    for bits in product((False, True), repeat=len(vs)):
        yield dict(zip(vs, bits))


def gen_from_sparse_sat(s: SparseCnf, budget: Optional[int] = None) -> GeneratedInstance:
    problems = check_sparse(s, sizes=False)
    if problems:
        raise GeneratorError("not a Sparse 3-SAT instance: " + "; ".join(problems))
    budget = default_budget() if budget is None else budget
    K = s.K
    total = sum(2 ** len(g) for g in s.var_groups) + sum(2 ** len(s.clause_vars(j)) for j in range(K))
    if total > budget:
        raise BudgetExceeded(f"{total} candidate words exceed budget {budget}")
    slots = [Slot(f"H{i:03d}", H, 2 * i - 1, 1, 2 * K + 2 * i) for i in range(1, K + 1)]
    slots += [Slot(f"V{j:03d}", V, 1, 2 * j - 1, 5 * K + 2 * j) for j in range(1, K + 1)]
    words: list[str] = []
    for i in range(K):
        words.extend(h_word(s, i, sg) for sg in _sigmas(sorted(s.var_groups[i])))
    for j in range(K):
        cv = s.clause_vars(j)
        sub = CnfFormula(s.formula.nvars, tuple(s.formula.clauses[c] for c in s.clause_groups[j]))
        words.extend(v_word(s, j, sg) for sg in _sigmas(cv) if satisfies(sub, _complete(s, sg)))
    words = list(dict.fromkeys(words))
    inst = build(slots, "01", words, reuse=False)
    params = {"N": s.N, "K": K, "variables": len(s.variables()), "clauses": len(s.formula.clauses)}
    return GeneratedInstance(inst, "sparse", params, "truth assignment", {"sparse": s})


def _complete(s: SparseCnf, sigma: Mapping[int, bool]) -> dict[int, bool]:
    full = {v: False for v in range(1, s.formula.nvars + 1)}
    full.update(sigma)
    return full


def witness_sparse(gen: GeneratedInstance, witness: Mapping[int, bool]) -> dict:
    s: SparseCnf = gen.data["sparse"]
    missing = [v for v in s.variables() if v not in witness]
    if missing:
        raise MalformedWitness(f"no value for variables {missing}")
    sigma = _complete(s, {v: bool(witness[v]) for v in s.variables()})
    words = {}
    for i in range(s.K):
        words[f"H{i + 1:03d}"] = h_word(s, i, sigma)
    for j in range(s.K):
        sub = CnfFormula(s.formula.nvars, tuple(s.formula.clauses[c] for c in s.clause_groups[j]))
        if not satisfies(sub, sigma):
            raise WitnessRejected(f"assignment falsifies a clause of group {j + 1}")
        words[f"V{j + 1:03d}"] = v_word(s, j, sigma)
    return checked(gen, words)


def brute_sparse(s: SparseCnf) -> Optional[dict[int, bool]]:
    vs = s.variables()
    for sg in _sigmas(vs):
        if satisfies(s.formula, _complete(s, sg)):
            return sg
    return None
