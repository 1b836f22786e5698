"""Real grid states and their gradings.

A real state is a permutation ``pi`` (point ``i`` at lattice ``(i, pi[i])``)
fixed by the involution, i.e. ``pi o tau o pi = tau`` with ``tau(i) = -i mod n``.
Equivalently ``sigma = pi o tau`` is an involution, so states are generated as
involutions in lexicographic order and mapped through ``pi = sigma o tau``.

Gradings are exact integers.  Marker positions sit at half-integers, so the
classical Maslov function is evaluated in doubled coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .diagram import Diagram, LinkTrace, trace_link


class GradingError(RuntimeError):
    """Internal-consistency failure: a grading that must be integral is not."""


@dataclass(frozen=True)
class State:
    pi: tuple[int, ...]
    onC: int

    @classmethod
    def from_pi(cls, pi: Sequence[int]) -> State:
        n = len(pi)
        pi = tuple(int(v) for v in pi)
        return cls(pi, sum(1 for i in range(n) if pi[i] == (n - i) % n))

    @property
    def n(self) -> int:
        return len(self.pi)

    def points(self) -> list[tuple[int, int]]:
        return list(enumerate(self.pi))

    def is_real(self) -> bool:
        n = self.n
        return all(self.pi[(n - self.pi[i]) % n] == (n - i) % n for i in range(n))


@dataclass(frozen=True, order=True)
class Bigrading:
    m: int
    a2: int

    @property
    def delta2(self) -> int:
        return 2 * self.m - self.a2


def _involutions(n: int) -> Iterator[list[int]]:
    sigma = [-1] * n

    def rec(i: int) -> Iterator[list[int]]:
        while i < n and sigma[i] >= 0:
            i += 1
        if i == n:
            yield sigma
            return
        sigma[i] = i
        yield from rec(i + 1)
        for j in range(i + 1, n):
            if sigma[j] < 0:
                sigma[i], sigma[j] = j, i
                yield from rec(i + 1)
                sigma[j] = -1
        sigma[i] = -1

    yield from rec(0)


def enumerate_states(n: int) -> Iterator[State]:
    """Yield every real state once, ordered lexicographically by ``sigma``."""
    tau = [(n - i) % n for i in range(n)]
    for sigma in _involutions(n):
        yield State.from_pi([sigma[tau[i]] for i in range(n)])


@lru_cache(maxsize=None)
def count_states(n: int) -> int:
    if n <= 1:
        return 1
    return count_states(n - 1) + (n - 1) * count_states(n - 2)


def state_array(n: int) -> np.ndarray:
    """All real states as rows of ``pi``, in canonical order (int8, shape N x n)."""
    from ._kernels import involution_rows
    return involution_rows(n, count_states(n))


def state_codes(pis: np.ndarray) -> np.ndarray:
    """Pack each state row into a uint64 (4 bits per entry; n <= 16)."""
    n = pis.shape[1]
    if n > 16:
        raise ValueError("state packing supports n <= 16")
    codes = np.zeros(pis.shape[0], dtype=np.uint64)
    for i in range(n):
        codes |= pis[:, i].astype(np.uint64) << np.uint64(4 * i)
    return codes


# ---------------------------------------------------------------------------
# classical Maslov function, doubled coordinates


def _count_sw(a: Sequence[tuple[int, int]], b: Sequence[tuple[int, int]]) -> int:
    return sum(1 for (ax, ay) in a for (bx, by) in b if ax < bx and ay < by)


def classical_maslov(d: Diagram, x: State, which: str = "O") -> int:
    """M(x) = J(x,x) - 2J(x,P) + J(P,P) + 1 with P at cell centres."""
    sigma = d.sigma_o if which.upper().startswith("O") else d.sigma_x
    pts = [(2 * i, 2 * r) for i, r in enumerate(x.pi)]
    mk = [(2 * c + 1, 2 * r + 1) for c, r in enumerate(sigma)]
    jxx = _count_sw(pts, pts)
    jpp = _count_sw(mk, mk)
    two_jxp = _count_sw(pts, mk) + _count_sw(mk, pts)
    return jxx - two_jxp + jpp + 1


def _quarter(num: int, what: str) -> int:
    if num % 4:
        raise GradingError(f"{what} is not integral ({num}/4)")
    return num // 4


def real_maslov(d: Diagram, x: State, which: str, l_f: int) -> int:
    return _quarter(2 * classical_maslov(d, x, which) - x.onC + l_f, f"M^R_{which}")


def shift_constant(n: int, trace: LinkTrace) -> int:
    """Doubled normalization ``(n - l_f - 2 l_p) / 2`` of the Alexander grading."""
    k2 = n - trace.l_f - 2 * trace.l_p
    if k2 % 2:
        raise GradingError("n - l_f - 2 l_p must be even")
    return k2 // 2


def real_gradings(d: Diagram, x: State, trace: LinkTrace | None = None) -> tuple[Bigrading, int]:
    """Return ``(Bigrading(m, a2), M^R_X)`` for state ``x``."""
    trace = trace or trace_link(d)
    mo = real_maslov(d, x, "O", trace.l_f)
    mx = real_maslov(d, x, "X", trace.l_f)
    return Bigrading(mo, mo - mx - shift_constant(d.n, trace)), mx


def nw_state(d: Diagram) -> State:
    """The state at the upper-left lattice corners of the O cells."""
    n = d.n
    pi = [0] * n
    for c, r in enumerate(d.sigma_o):
        pi[c] = (r + 1) % n
    return State.from_pi(pi)


# ---------------------------------------------------------------------------
# batch path


def _sw_pairs_within(pts_x: np.ndarray, pts_y: np.ndarray) -> np.ndarray:
    # pts_*: (N, n); counts ordered pairs (a, b) with a strictly SW of b
    lt_x = pts_x[:, :, None] < pts_x[:, None, :]
    lt_y = pts_y[:, :, None] < pts_y[:, None, :]
    return (lt_x & lt_y).sum(axis=(1, 2))


def _maslov_batch(pis: np.ndarray, sigma: Sequence[int]) -> np.ndarray:
    n = pis.shape[1]
    cols = np.arange(n) * 2
    rows = pis.astype(np.int16) * 2
    mk_c = np.arange(n) * 2 + 1
    mk_r = np.asarray(sigma) * 2 + 1
    # J(x,x): columns are distinct and increasing, so count increasing pairs
    jxx = np.zeros(pis.shape[0], dtype=np.int64)
    for i in range(n):
        jxx += (rows[:, i:i + 1] < rows[:, i + 1:]).sum(axis=1)
    jpp = int(((mk_c[:, None] < mk_c[None, :]) & (mk_r[:, None] < mk_r[None, :])).sum())
    col_lt = cols[:, None] < mk_c[None, :]          # (n_pts, n_mk)
    col_gt = cols[:, None] > mk_c[None, :]
    cross = np.zeros(pis.shape[0], dtype=np.int64)
    for i in range(n):
        ri = rows[:, i:i + 1]
        cross += ((ri < mk_r[None, :]) & col_lt[i][None, :]).sum(axis=1)
        cross += ((ri > mk_r[None, :]) & col_gt[i][None, :]).sum(axis=1)
    return jxx - cross + jpp + 1


def gradings_batch(d: Diagram, pis: np.ndarray, trace: LinkTrace | None = None,
                   chunk: int = 1 << 16) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized ``(m, a2, M^R_X)`` for many states (rows of ``pis``)."""
    trace = trace or trace_link(d)
    n = d.n
    tau = (n - np.arange(n)) % n
    m = np.empty(pis.shape[0], dtype=np.int64)
    mx = np.empty(pis.shape[0], dtype=np.int64)
    for s in range(0, pis.shape[0], chunk):
        block = pis[s:s + chunk]
        onc = (block == tau[None, :]).sum(axis=1)
        for which, out in (("O", m), ("X", mx)):
            sig = d.sigma_o if which == "O" else d.sigma_x
            num = 2 * _maslov_batch(block, sig) - onc + trace.l_f
            if np.any(num % 4):
                raise GradingError(f"M^R_{which} is not integral for some state")
            out[s:s + chunk] = num // 4
    a2 = m - mx - shift_constant(n, trace)
    return m, a2, mx
