from pathlib import Path

import pytest

from xword.core import H, V, Alphabet, Dictionary, Instance, Slot, validate_grid

DATA = Path(__file__).parent / "data"


def make(slots, letters="ab", weights=None, words=(), prefills=None, reuse=True):
    weights = weights if weights is not None else {ch: 1 for ch in letters}
    return Instance(validate_grid(slots), Alphabet(letters, weights), Dictionary(words), prefills or {}, reuse)


def cross(reuse=True, prefills=None):
    return make([Slot("h1", H, 1, 1, 2), Slot("v1", V, 1, 1, 2)], "ab", {"a": 1, "b": 2},
                ["ab", "bb"], prefills, reuse)


@pytest.fixture
def fix_cross():
    return cross(True)


@pytest.fixture
def fix_cross_noreuse():
    return cross(False)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.REPORT):
        terminalreporter.write_line(mod.REPORT[n])
