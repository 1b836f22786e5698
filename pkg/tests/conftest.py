import functools
import sys

import pytest

from realgrid.corpus import corpus_get
from realgrid.invariants import knot_invariants

MINUS_LIMIT = 11


@functools.lru_cache(maxsize=None)
def invariants_of(name: str, minus: bool | None = None):
    d = corpus_get(name)
    if minus is None:
        minus = d.n <= MINUS_LIMIT
    return knot_invariants(d, minus=minus, check=True)


@pytest.fixture
def inv():
    return invariants_of


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in range(1, 13):
        if k in mod.RESULTS:
            ok, detail = mod.RESULTS[k]
            terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        else:
            terminalreporter.write_line(f"criterion {k:2d}: NOT RUN")
