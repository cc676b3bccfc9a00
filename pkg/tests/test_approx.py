from fractions import Fraction

import pytest

from xword import exact
from xword.approx import InvalidEpsilon, approx_solve, certificate, ratio_bound
from xword.core import evaluate
from xword.corpus import random_corpus


def test_fix_cross(fix_cross, fix_cross_noreuse):
    r, cert = approx_solve(fix_cross, 1)
    assert r.best_weight == 6 and cert.bound == Fraction(2, 3)
    r, cert = approx_solve(fix_cross_noreuse, 1)
    assert r.best_weight == 4 and cert.k_v == 1 and cert.exhaustive


def test_bound_formula():
    assert ratio_bound(1, 2) == Fraction(2, 3)
    assert ratio_bound("0.5", 4) == Fraction(1, 2) + Fraction(1, 6)


@pytest.mark.parametrize("eps", [0, -1, 2, "x"])
def test_bad_epsilon(fix_cross, eps):
    with pytest.raises(InvalidEpsilon):
        approx_solve(fix_cross, eps)


def test_group_parameters():
    for inst in random_corpus(30, base_seed=40):
        cert = certificate(inst, Fraction(1, 2))
        v = len(inst.grid.vertical())
        assert cert.k_v == min(2, v)
        assert cert.k_v * cert.r_v >= v


@pytest.mark.parametrize("eps", [Fraction(1), Fraction(1, 2), Fraction(1, 3)])
def test_ratio_holds(eps):
    for inst in random_corpus(150, base_seed=11000):
        opt = exact.oracle(inst).best_weight
        r, cert = approx_solve(inst, eps)
        assert evaluate(inst, r.best_assignment).weight == r.best_weight
        assert opt >= r.best_weight >= cert.bound * opt
        if cert.exhaustive:
            assert r.best_weight == opt
        m = len(inst.dictionary) + 1
        # an empty side runs a single pass with the empty tuple
        assert r.stats["candidates"] <= m ** cert.k_v * max(cert.r_v, 1) + m ** cert.k_h * max(cert.r_h, 1)


def test_jobs_invariant():
    for inst in random_corpus(10, base_seed=12000):
        a, _ = approx_solve(inst, 1, jobs=1)
        b, _ = approx_solve(inst, 1, jobs=2)
        assert a.best_assignment == b.best_assignment
