"""Polynomial-time approximation for CP-Opt, both reuse modes.

Vertical slots are split into groups of at most ``ceil(1/eps)``. For each
group every consistent word tuple is tried, the horizontal slots are then
completed optimally and the other verticals are left empty. The same is done
with the roles swapped and the heaviest fill wins. The result is within a
factor ``1/2 + 1/(2(eps*n + 1))`` of the optimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import EMPTY, Instance, assignment_key, evaluate
from .exact import (
    BudgetExceeded,
    PreconditionViolated,
    SolveResult,
    _Best,
    _cover_tuples,
    _reduce,
    _run,
    complete_residual,
    default_budget,
)


class InvalidEpsilon(PreconditionViolated):
    pass


@dataclass(frozen=True)
class RatioCertificate:
    epsilon: Fraction
    n: int
    bound: Fraction
    k_v: int
    r_v: int
    k_h: int
    r_h: int

    @property
    def exhaustive(self) -> bool:
        """Both passes see a single group, so the answer is optimal."""
        return self.r_v <= 1 and self.r_h <= 1


def parse_epsilon(eps) -> Fraction:
    try:
        e = Fraction(str(eps)) if not isinstance(eps, Fraction) else eps
    except (ValueError, ZeroDivisionError):
        raise InvalidEpsilon(f"epsilon must be a number, got {eps!r}") from None
    if not 0 < e <= 1:
        raise InvalidEpsilon(f"epsilon must lie in (0, 1], got {eps}")
    return e


def ratio_bound(epsilon, n: int) -> Fraction:
    e = parse_epsilon(epsilon)
    return Fraction(1, 2) + Fraction(1, 2) / (e * n + 1)


def _groups(ids: list[str], k: int) -> list[list[str]]:
    # an empty side still gets one pass with nothing guessed, which completes
    # the other side optimally
    if not ids:
        return [[]]
    return [ids[i:i + k] for i in range(0, len(ids), k)]


def _params(v: int, e: Fraction) -> tuple[int, int]:
    k = min(math.ceil(1 / e), v)
    r = math.ceil(v / k) if v else 0
    return k, r


def certificate(instance: Instance, epsilon) -> RatioCertificate:
    e = parse_epsilon(epsilon)
    v = len(instance.grid.vertical())
    h = len(instance.grid.horizontal())
    k_v, r_v = _params(v, e)
    k_h, r_h = _params(h, e)
    n = v + h
    return RatioCertificate(e, n, ratio_bound(e, n), k_v, r_v, k_h, r_h)


def _passes(instance: Instance, cert: RatioCertificate):
    vs = [s.id for s in instance.grid.vertical()]
    hs = [s.id for s in instance.grid.horizontal()]
    for guessed, other, k in ((vs, hs, cert.k_v), (hs, vs, cert.k_h)):
        for group in _groups(guessed, max(k, 1)):
            rest = [s for s in guessed if s not in group]
            yield group, rest, other


def _approx_part(instance: Instance, arg, residue: int, stride: int) -> dict:
    cert, budget = arg
    acc = _Best()
    idx = -1
    for group, idle, other in _passes(instance, cert):
        for tup in _cover_tuples(instance, group):
            idx += 1
            if idx >= budget:
                raise BudgetExceeded(f"approximation exceeded {budget} candidates")
            if idx % stride != residue:
                continue
            acc.evaluated += 1
            partial = dict(zip(group, tup))
            partial.update((s, EMPTY) for s in idle)
            a = complete_residual(instance, partial, other)
            ev = evaluate(instance, a)
            if ev.valid:
                acc.offer(ev.weight, assignment_key(instance, a), a)
    return acc.result(idx + 1)


def approx_solve(instance: Instance, epsilon, budget: Optional[int] = None,
                 jobs: int = 1) -> tuple[SolveResult, RatioCertificate]:
    cert = certificate(instance, epsilon)
    budget = default_budget() if budget is None else budget
    parts = _run(_approx_part, instance, (cert, budget), jobs)
    res = _reduce(parts, instance, "approx", {"k_v": cert.k_v, "r_v": cert.r_v, "k_h": cert.k_h, "r_h": cert.r_h})
    return res, cert
