"""Homology of real grid complexes over F_2 and F_2[u], and division by W.

Every minus-tilde entry ``x -> u^e y`` has ``e = a2(y) - a2(x)`` and lowers
``m - a2`` by one, so the complex is the Rees module of a filtered complex
(filtration level ``-a2``).  Unit entries (``e = 0``) are cancelled first; what
remains generates the tilde homology.  A column reduction ordered by filtration
then pairs the survivors: a pair of length ``o`` is an ``F[u]/u^o`` summand
sitting at the bigrading of its lower end, unpaired generators are towers.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

import numpy as np

from .complexes import GradedComplex


class DivisionError(RuntimeError):
    """W-division was not exact (signals wrong gradings or a wrong domain set)."""


class BigradedDims(dict):
    """``{(m, a2): dim}`` with zero entries dropped."""

    def __init__(self, data: Mapping | Iterable = ()):
        super().__init__()
        for key, v in dict(data).items():
            if v:
                self[(int(key[0]), int(key[1]))] = int(v)

    @property
    def total(self) -> int:
        return sum(self.values())

    def items_sorted(self):
        return sorted(self.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def to_json_obj(self) -> list[dict]:
        return [{"m": m, "a2": a, "dim": v} for (m, a), v in self.items_sorted()]


@dataclass
class UModule:
    towers: list = field(default_factory=list)      # [(m, a2)]
    torsion: list = field(default_factory=list)     # [(m, a2, order, mult)]

    @classmethod
    def from_counters(cls, towers: Counter, torsion: Counter) -> UModule:
        tw = sorted(k for k, v in towers.items() for _ in range(v))
        ts = sorted((m, a, o, v) for (m, a, o), v in torsion.items() if v)
        return cls(tw, ts)

    def tower_counter(self) -> Counter:
        return Counter(self.towers)

    def torsion_counter(self) -> Counter:
        c: Counter = Counter()
        for m, a, o, v in self.torsion:
            c[(m, a, o)] += v
        return c

    def __eq__(self, other) -> bool:
        return (isinstance(other, UModule) and self.tower_counter() == other.tower_counter()
                and self.torsion_counter() == other.torsion_counter())

    def to_json_obj(self) -> dict:
        return {"towers": [{"m": m, "a2": a} for m, a in self.towers],
                "torsion": [{"m": m, "a2": a, "order": o, "mult": v} for m, a, o, v in self.torsion]}


def result_json(flavor: str, dims: BigradedDims | None = None, module: UModule | None = None) -> str:
    obj: dict = {"flavor": flavor, "bigraded": dims.to_json_obj() if dims is not None else []}
    if module is not None:
        obj["module"] = module.to_json_obj()
    return json.dumps(obj, sort_keys=True)


# ---------------------------------------------------------------------------
# reduction


def _cancel_units(c: GradedComplex):
    """Gaussian elimination of every e = 0 entry.  Returns surviving generator
    ids and their outgoing entries (all with e >= 1)."""
    N = c.generators
    out: list[set] = [set() for _ in range(N)]
    inc: list[set] = [set() for _ in range(N)]
    for s, t in zip(c.src.tolist(), c.tgt.tolist()):
        out[s].add(t)
        inc[t].add(s)
    a2 = c.a2.tolist()
    alive = [True] * N
    # process sources from high Maslov grading down; fill-in stays local
    order = sorted(range(N), key=lambda i: (-int(c.m[i]), i))
    for x in order:
        while alive[x]:
            best = -1
            best_cost = None
            ax = a2[x]
            for y in out[x]:
                if a2[y] == ax:
                    cost = len(inc[y])
                    if best_cost is None or cost < best_cost:
                        best, best_cost = y, cost
                        if cost == 1:
                            break
            if best < 0:
                break
            y = best
            zs = [z for z in inc[y] if z != x]
            ws = [w for w in out[x] if w != y]
            for z in zs:
                oz = out[z]
                for w in ws:
                    if w in oz:
                        oz.remove(w)
                        inc[w].remove(z)
                    else:
                        oz.add(w)
                        inc[w].add(z)
            for node in (x, y):
                for w in out[node]:
                    inc[w].discard(node)
                for z in inc[node]:
                    out[z].discard(node)
                out[node] = set()
                inc[node] = set()
                alive[node] = False
    survivors = [i for i in range(N) if alive[i]]
    return survivors, out


def peel_core(c: GradedComplex) -> GradedComplex:
    """Cancel every unit entry with a degree-one endpoint (compiled, no
    fill-in) and return the complex on the remaining generators."""
    from ._kernels import peel

    alive = peel(c.generators, c.src.astype(np.int32), c.tgt.astype(np.int32))
    ids = np.flatnonzero(alive)
    remap = np.full(c.generators, -1, dtype=np.int64)
    remap[ids] = np.arange(ids.size)
    keep = alive[c.src] & alive[c.tgt]
    return replace(c, m=c.m[ids], a2=c.a2[ids], src=remap[c.src[keep]].astype(np.int32),
                   tgt=remap[c.tgt[keep]].astype(np.int32), e=c.e[keep])


def homology_f2(c: GradedComplex) -> BigradedDims:
    """Bigraded homology of the complex with u = 0 (the tilde homology)."""
    if np.any(c.e):
        raise ValueError("homology_f2 expects a complex of unit entries")
    core = peel_core(c)
    survivors, _ = _cancel_units(core)
    return BigradedDims(Counter((int(core.m[i]), int(core.a2[i])) for i in survivors))


def homology_over_u(c: GradedComplex) -> UModule:
    return homology_both(c)[1]


def homology_both(c: GradedComplex) -> tuple[BigradedDims, UModule]:
    """Tilde homology (the unit-cancellation survivors) and the F[u] module
    from a single cancellation pass over a minus complex."""
    survivors, out = _cancel_units(c)
    m, a2 = c.m, c.a2
    tilde = BigradedDims(Counter((int(m[i]), int(a2[i])) for i in survivors))
    # filtration -a2 ascending, then Maslov ascending: boundaries come first
    order = sorted(survivors, key=lambda i: (-int(a2[i]), int(m[i]) - int(a2[i]), i))
    pos = {g: k for k, g in enumerate(order)}
    pivot_of: dict[int, int] = {}
    reduced: dict[int, set] = {}
    paired: set = set()
    torsion: Counter = Counter()
    for g in order:
        col = {pos[t] for t in out[g]}
        delta = int(m[g]) - int(a2[g]) - 1
        while col:
            low = max(col)
            if low in pivot_of:
                col ^= reduced[pivot_of[low]]
            else:
                break
        if col:
            low = max(col)
            h = order[low]
            if int(m[h]) - int(a2[h]) != delta:
                raise RuntimeError("non-homogeneous boundary during reduction")
            pivot_of[low] = g
            reduced[g] = col
            o = int(a2[h]) - int(a2[g])
            if o <= 0:
                raise RuntimeError("unit entry survived cancellation")
            torsion[(int(m[h]), int(a2[h]), o)] += 1
            paired.update((g, h))
    towers = Counter((int(m[g]), int(a2[g])) for g in order if g not in paired)
    return tilde, UModule.from_counters(towers, torsion)


# ---------------------------------------------------------------------------
# W factors: F^2 at (m, a2) = (0, 0) and (-1, -2)


def _divide_counter(cnt: Mapping[tuple[int, int], int], k: int) -> Counter:
    """Exact division of sum cnt[(m, a2)] q^m T^a2 by (1 + q^-1 T^-2)^k."""
    cur = Counter({key: v for key, v in cnt.items() if v})
    for _ in range(k):
        lines: dict[int, dict[int, int]] = defaultdict(dict)
        for (m, a), v in cur.items():
            lines[2 * m - a][m] = v
        nxt: Counter = Counter()
        for line, vals in lines.items():
            # along a line W shifts m by -1; divide from the top down
            rem = dict(vals)
            for mm in sorted(rem, reverse=True):
                q = rem.get(mm, 0)
                if q == 0:
                    continue
                if q < 0:
                    raise DivisionError(f"negative coefficient at m={mm} on line 2m-a2={line}")
                nxt[(mm, 2 * mm - line)] += q
                rem[mm] = 0
                rem[mm - 1] = rem.get(mm - 1, 0) - q
            if any(v != 0 for v in rem.values()):
                raise DivisionError(f"division by W is not exact on line 2m-a2={line}")
        cur = nxt
    return cur


def divide_w(obj, k: int):
    if k < 0:
        raise ValueError("k must be non-negative")
    if isinstance(obj, UModule):
        towers = _divide_counter(obj.tower_counter(), k)
        by_order: dict[int, Counter] = defaultdict(Counter)
        for (m, a, o), v in obj.torsion_counter().items():
            by_order[o][(m, a)] += v
        torsion: Counter = Counter()
        for o, cnt in by_order.items():
            for (m, a), v in _divide_counter(cnt, k).items():
                torsion[(m, a, o)] += v
        return UModule.from_counters(towers, torsion)
    return BigradedDims(_divide_counter(obj, k))


def hat_from_minus(mod: UModule) -> BigradedDims:
    """Hat groups implied by a minus decomposition.

    A tower at (m, a2) gives (m, a2).  ``F[u]/u^o`` with top at (m, a2) gives
    its top (the cokernel of u) and its bottom ``u^(o-1)`` (the kernel of u),
    which moves one step up in homological degree: (m - o + 1, a2 - o).
    """
    out: Counter = Counter(mod.tower_counter())
    for (m, a, o), v in mod.torsion_counter().items():
        out[(m, a)] += v
        out[(m - o + 1, a - o)] += v
    return BigradedDims(out)


def tensor_w(dims: Mapping[tuple[int, int], int], k: int = 1) -> BigradedDims:
    cur = Counter(dims)
    for _ in range(k):
        nxt: Counter = Counter()
        for (m, a), v in cur.items():
            nxt[(m, a)] += v
            nxt[(m - 1, a - 2)] += v
        cur = nxt
    return BigradedDims(cur)
