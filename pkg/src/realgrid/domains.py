"""Empty real rectangles (index-1 real domains) out of a real grid state.

Four shapes occur.  With ``p = (i, pi[i])`` an off-axis point of ``x`` and
``Rp = (j, tau(i))`` its mirror (``j = tau(pi[i])``):

* ``Square``: the rho-invariant rectangle with lower-left ``p`` and upper-right
  ``Rp``; its other two corners lie on the axis.
* ``Hexagon``: an L-shape with convex corners ``p``, ``Rp`` and a concave corner
  at an axis point ``(k, tau(k))`` of ``x`` with ``k`` strictly between ``i`` and
  ``j``.  Two orientations.
* ``Octagon``: two rectangles overlapping in a staircase, concave corners at two
  axis points of ``x`` between ``i`` and ``j``.
* ``Pair``: an ordinary rectangle with no corner on the axis plus its mirror
  image; multiplicity 2 where they overlap.

Each candidate passes one generic validator (rho-invariance, boundary
condition, real Maslov index 1, emptiness), so the shape list only has to be
complete.  :mod:`realgrid.oracle` checks completeness by brute force.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .diagram import Diagram
from .states import State, enumerate_states

SQUARE = "Square"
HEXAGON = "Hexagon"
OCTAGON = "Octagon"
PAIR = "Pair"
KINDS = (SQUARE, HEXAGON, OCTAGON, PAIR)


@dataclass(frozen=True)
class Domain:
    mult: tuple[tuple[int, ...], ...]   # mult[c][r]
    source: State
    target: State
    kind: str
    nO: int
    nX: int

    @property
    def n(self) -> int:
        return len(self.mult)

    def key(self) -> tuple:
        return (self.target.pi, self.mult)


def _cyc_range(a: int, b: int, n: int) -> list[int]:
    """Cyclic half-open interval ``[a -> b)``."""
    return [(a + t) % n for t in range((b - a) % n)]


def _between(a: int, k: int, b: int, n: int) -> bool:
    """``k`` strictly inside the cyclic open interval ``(a, b)``."""
    return 0 < (k - a) % n < (b - a) % n


def _add_rect(D: np.ndarray, c0: int, c1: int, r0: int, r1: int, val: int = 1) -> None:
    n = D.shape[0]
    cols = _cyc_range(c0, c1, n)
    rows = _cyc_range(r0, r1, n)
    if cols and rows:
        D[np.ix_(cols, rows)] += val


def incident_sum(D: np.ndarray, i: int, j: int) -> int:
    n = D.shape[0]
    return int(D[(i - 1) % n, (j - 1) % n] + D[i, (j - 1) % n] + D[(i - 1) % n, j] + D[i, j])


def _is_interior(D: np.ndarray, i: int, j: int) -> bool:
    n = D.shape[0]
    return min(D[(i - 1) % n, (j - 1) % n], D[i, (j - 1) % n], D[(i - 1) % n, j], D[i, j]) >= 1


def is_rho_invariant(D: np.ndarray) -> bool:
    n = D.shape[0]
    return bool(np.array_equal(D, D[::-1, ::-1].T)) if n else True


def boundary_ok(D: np.ndarray, x: Iterable[int], y: Iterable[int]) -> bool:
    """``D`` is a 2-chain from ``x`` to ``y``: across each horizontal line the
    jump of ``D`` equals the arc from ``x`` to ``y`` on that line, up to a
    constant."""
    n = D.shape[0]
    xcol = [0] * n
    ycol = [0] * n
    for i, r in enumerate(x):
        xcol[r] = i
    for i, r in enumerate(y):
        ycol[r] = i
    for j in range(n):
        arc = np.zeros(n, dtype=np.int64)
        arc[_cyc_range(xcol[j], ycol[j], n)] = 1
        jump = D[:, j].astype(np.int64) - D[:, (j - 1) % n] - arc
        if np.any(jump != jump[0]):
            return False
    return True


def real_index_x8(D: np.ndarray, x: State, y: State) -> int:
    """Eight times the real Maslov index (Euler measure vanishes on a grid)."""
    s = sum(incident_sum(D, i, r) for i, r in enumerate(x.pi))
    s += sum(incident_sum(D, i, r) for i, r in enumerate(y.pi))
    return s - 2 * (x.onC - y.onC)


def interior_empty(D: Domain | np.ndarray, x: State | None = None, y: State | None = None) -> bool:
    """No point of the source or target lies in the interior of the domain."""
    if isinstance(D, Domain):
        M, x, y = np.array(D.mult), D.source, D.target
    else:
        M = np.asarray(D)
    pts = set(enumerate(x.pi)) | set(enumerate(y.pi))
    return not any(_is_interior(M, i, r) for i, r in pts)


def marker_counts(d: Diagram, D: np.ndarray) -> tuple[int, int]:
    nO = int(sum(D[c, r] for c, r in enumerate(d.sigma_o)))
    nX = int(sum(D[c, r] for c, r in enumerate(d.sigma_x)))
    return nO, nX


def _replace(pi: list[int], old: Iterable[tuple[int, int]], new: Iterable[tuple[int, int]]) -> list[int] | None:
    out = list(pi)
    for c, r in old:
        if out[c] != r:
            return None
    for c, r in new:
        out[c] = r
    if len(set(out)) != len(out):
        return None
    return out


def _candidates(x: State):
    """Yield ``(kind, D, y_pi)`` covering every index-1 real domain out of ``x``."""
    n = x.n
    pi = list(x.pi)
    tau = [(n - i) % n for i in range(n)]
    on_c = [k for k in range(n) if pi[k] == tau[k]]
    for i in range(n):
        if pi[i] == tau[i]:
            continue
        j = tau[pi[i]]
        p, rp = (i, pi[i]), (j, tau[i])
        D = np.zeros((n, n), dtype=np.int8)
        _add_rect(D, i, j, pi[i], tau[i])
        yield SQUARE, D, _replace(pi, [p, rp], [(i, tau[i]), (j, pi[i])])

        inner = [k for k in on_c if _between(i, k, j, n)]
        for k in inner:
            c0 = (k, tau[k])
            D = np.zeros((n, n), dtype=np.int8)
            _add_rect(D, i, j, pi[i], tau[k])
            _add_rect(D, k, j, tau[k], tau[i])
            yield HEXAGON, D, _replace(pi, [p, rp, c0], [(j, pi[i]), (k, tau[i]), (i, tau[k])])
            D = np.zeros((n, n), dtype=np.int8)
            _add_rect(D, i, j, tau[k], tau[i])
            _add_rect(D, i, k, pi[i], tau[k])
            yield HEXAGON, D, _replace(pi, [p, rp, c0], [(k, pi[i]), (j, tau[k]), (i, tau[i])])
        for k1 in inner:
            for k2 in inner:
                if not _between(k1, k2, j, n):
                    continue
                D = np.zeros((n, n), dtype=np.int8)
                _add_rect(D, k1, j, tau[k2], tau[i])
                _add_rect(D, i, k2, pi[i], tau[k1])
                np.minimum(D, 1, out=D)
                old = [p, rp, (k1, tau[k1]), (k2, tau[k2])]
                new = [(k2, pi[i]), (j, tau[k2]), (k1, tau[i]), (i, tau[k1])]
                yield OCTAGON, D, _replace(pi, old, new)

    # thin cross: a full column and its mirror row, around a fixed cell whose
    # two axis corners belong to x; always covers an X, so never in a differential
    for c in range(n):
        c1 = (c + 1) % n
        if pi[c] == tau[c] and pi[c1] == tau[c1]:
            D = np.zeros((n, n), dtype=np.int8)
            D[c, :] = 1
            D[:, n - 1 - c] = 1
            yield OCTAGON, D, _replace(pi, [(c, tau[c]), (c1, tau[c1])],
                                       [(c, tau[c1]), (c1, tau[c])])

    for a in range(n):
        if pi[a] == tau[a]:
            continue
        for b in range(n):
            if b == a or pi[b] == tau[b]:
                continue
            ma, mb = tau[pi[a]], tau[pi[b]]
            if ma in (a, b) or mb in (a, b):
                continue
            D = np.zeros((n, n), dtype=np.int8)
            _add_rect(D, a, b, pi[a], pi[b])
            _add_rect(D, mb, ma, tau[b], tau[a])
            old = [(a, pi[a]), (b, pi[b]), (mb, tau[b]), (ma, tau[a])]
            new = [(a, pi[b]), (b, pi[a]), (mb, tau[a]), (ma, tau[b])]
            yield PAIR, D, _replace(pi, old, new)


def accept(d: Diagram, x: State, y: State, D: np.ndarray) -> bool:
    """Generic index-1 test shared with the brute-force oracle."""
    return (D.max() <= 2 and D.min() >= 0
            and is_rho_invariant(D)
            and boundary_ok(D, x.pi, y.pi)
            and real_index_x8(D, x, y) == 8
            and interior_empty(D, x, y))


def successors(d: Diagram, x: State, avoid_x: bool = True) -> list[Domain]:
    """Empty real rectangles out of ``x``.

    With ``avoid_x`` (the default) only domains missing every X marker are
    kept: these are the ones counted by the minus differential.
    """
    seen: dict[tuple, Domain] = {}
    for kind, D, ypi in _candidates(x):
        if ypi is None:
            continue
        y = State.from_pi(ypi)
        if not y.is_real() or not accept(d, x, y, D):
            continue
        nO, nX = marker_counts(d, D)
        if avoid_x and nX:
            continue
        mult = tuple(tuple(int(v) for v in row) for row in D)
        dom = Domain(mult, x, y, kind, nO, nX)
        seen.setdefault(dom.key(), dom)
    return sorted(seen.values(), key=lambda dm: (dm.target.pi, dm.mult))


@dataclass(frozen=True)
class DomainStats:
    generators: int
    total: int
    total_all: int
    per_kind: dict
    per_state: tuple

    def as_dict(self) -> dict:
        return {"generators": self.generators, "domains": self.total,
                "domains_including_x": self.total_all, "per_kind": dict(self.per_kind)}


def domain_stats(d: Diagram) -> DomainStats:
    kinds: Counter = Counter()
    per_state = []
    total_all = 0
    states = list(enumerate_states(d.n))
    for x in states:
        doms = successors(d, x, avoid_x=False)
        total_all += len(doms)
        kept = [dm for dm in doms if dm.nX == 0]
        kinds.update(dm.kind for dm in kept)
        per_state.append(len(kept))
    return DomainStats(len(states), sum(per_state), total_all,
                       {k: kinds.get(k, 0) for k in KINDS}, tuple(per_state))


@dataclass(frozen=True)
class DomainArrays:
    """Columnar domain list for a whole diagram: ``src[k] -> tgt[k]``."""
    src: np.ndarray
    tgt: np.ndarray
    kind: np.ndarray
    nO: np.ndarray
    nX: np.ndarray

    def __len__(self) -> int:
        return int(self.src.shape[0])


def domain_arrays(d: Diagram, states: np.ndarray, max_no: int | None = None,
                  keep_x: bool = False) -> DomainArrays:
    """Enumerate domains out of every state with the compiled kernel.

    ``states`` are rows of ``pi`` (see :func:`realgrid.states.state_array`);
    targets are reported as row indices.  ``max_no`` drops domains covering
    more O markers than that (0 gives the tilde differential).
    """
    from . import _kernels
    from .states import state_codes

    n = d.n
    st = np.ascontiguousarray(states, dtype=np.int64)
    codes = state_codes(states)
    order = np.argsort(codes, kind="stable").astype(np.int64)
    sorted_codes = codes[order]
    sig_o = np.asarray(d.sigma_o, dtype=np.int64)
    sig_x = np.asarray(d.sigma_x, dtype=np.int64)
    limit = n * n if max_no is None else max_no
    per_state = 2 * n ** 3 + 4 * n * n + 4 * n
    cap = max(per_state * 4, min(len(st) * 8 * n, 1 << 23))
    parts = []
    s = 0
    while s < len(st):
        bufs = (np.empty(cap, np.int32), np.empty(cap, np.int32), np.empty(cap, np.int8),
                np.empty(cap, np.int16), np.empty(cap, np.int16))
        s_next, cnt = _kernels.enumerate_block(st, s, sig_o, sig_x, sorted_codes, order,
                                               limit, keep_x, *bufs)
        if cnt < 0:
            raise RuntimeError(f"domain target from state {s_next} is not a real state")
        parts.append(tuple(b[:cnt].copy() for b in bufs))
        s = s_next
    cols = [np.concatenate([p[k] for p in parts]) if parts else np.empty(0) for k in range(5)]
    return DomainArrays(*cols)


def tilde_entries(d: Diagram, states: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Tilde differential as int32 ``src -> tgt`` arrays, merged mod 2.

    Lean variant of :func:`domain_arrays` for large grids: only domains
    avoiding every marker are kept and each block is merged before the next
    one is enumerated.  Also returns the number of domains before merging.
    """
    from . import _kernels
    from .states import state_codes

    n = d.n
    st = np.ascontiguousarray(states)
    codes = state_codes(states)
    order = np.argsort(codes, kind="stable").astype(np.int64)
    sorted_codes = codes[order]
    del codes
    sig_o = np.asarray(d.sigma_o, dtype=np.int64)
    sig_x = np.asarray(d.sigma_x, dtype=np.int64)
    per_state = 2 * n ** 3 + 4 * n * n + 4 * n
    cap = max(per_state * 4, min(len(st) * 8 * n, 1 << 23))
    bufs = (np.empty(cap, np.int32), np.empty(cap, np.int32), np.empty(cap, np.int8),
            np.empty(cap, np.int16), np.empty(cap, np.int16))
    srcs, tgts = [], []
    total = 0
    s = 0
    while s < len(st):
        s_next, cnt = _kernels.enumerate_block(st, s, sig_o, sig_x, sorted_codes, order, 0, False, *bufs)
        if cnt < 0:
            raise RuntimeError(f"domain target from state {s_next} is not a real state")
        total += cnt
        w = _kernels.mod2_segments(bufs[0][:cnt], bufs[1][:cnt])
        srcs.append(bufs[0][:w].copy())
        tgts.append(bufs[1][:w].copy())
        s = s_next
    src = np.concatenate(srcs) if srcs else np.empty(0, np.int32)
    del srcs
    tgt = np.concatenate(tgts) if tgts else np.empty(0, np.int32)
    return src, tgt, total
