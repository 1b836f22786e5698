"""Brute-force oracle for index-1 real domains on small grids.

For every ordered pair of real states every 2-chain with entries in {0, 1, 2}
connecting them is listed (a chain from ``x`` to ``y`` is fixed by its values
on row 0 and one offset per row), then filtered by rho-invariance, real index 1
and emptiness.  No shape information is used.  Cost grows like ``3^n`` per
pair, so this is for ``n <= 5``.
"""

from __future__ import annotations

import itertools

import numpy as np

from .diagram import Diagram
from .domains import accept, marker_counts
from .states import State, enumerate_states


def _arc_profile(x: State, y: State) -> np.ndarray:
    """E[c, j]: cumulative horizontal-line arcs from x to y up to row j."""
    n = x.n
    xcol = {r: i for i, r in enumerate(x.pi)}
    ycol = {r: i for i, r in enumerate(y.pi)}
    E = np.zeros((n, n), dtype=np.int64)
    for c in range(n):
        acc = 0
        for j in range(1, n):
            xs, ys = xcol[j], ycol[j]
            if xs != ys and (c - xs) % n < (ys - xs) % n:
                acc += 1
            E[c, j] = acc
    return E


def chains_between(x: State, y: State, cap: int = 2):
    n = x.n
    E = _arc_profile(x, y)
    for b in itertools.product(range(cap + 1), repeat=n):
        bv = np.array(b)
        ranges = []
        for j in range(1, n):
            lo = int((-bv - E[:, j]).max())
            hi = int((cap - bv - E[:, j]).min())
            if lo > hi:
                break
            ranges.append(range(lo, hi + 1))
        else:
            for rest in itertools.product(*ranges):
                A = np.array((0,) + rest)
                yield (bv[:, None] + A[None, :] + E).astype(np.int8)


def brute_domains(d: Diagram, avoid_x: bool = False) -> set[tuple]:
    """All index-1 empty real domains as ``(x.pi, y.pi, mult, nO, nX)`` tuples."""
    states = list(enumerate_states(d.n))
    out = set()
    for x in states:
        for y in states:
            if x == y:
                continue
            for D in chains_between(x, y):
                if not accept(d, x, y, D):
                    continue
                nO, nX = marker_counts(d, D)
                if avoid_x and nX:
                    continue
                out.add((x.pi, y.pi, tuple(map(tuple, D.tolist())), nO, nX))
    return out
