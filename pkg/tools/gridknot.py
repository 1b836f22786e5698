"""Classical helpers for the corpus-build tools: planar diagram codes from a
grid (vertical strands over horizontal), knot determinant from the winding
matrix, and SnapPy identification.  Not imported by the library."""

from __future__ import annotations

import numpy as np


def components(so, sx):
    n = len(so)
    o_col = {r: c for c, r in enumerate(so)}
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        cyc = []
        c = s
        while not seen[c]:
            seen[c] = True
            cyc.append(c)
            c = o_col[sx[c]]
        comps.append(cyc)
    return comps


def winding(so, sx):
    n = len(so)
    w = np.zeros((n, n), dtype=np.int64)
    for c in range(n):
        lo, hi = sorted((so[c], sx[c]))
        sgn = 1 if sx[c] > so[c] else -1
        for i in range(c + 1):
            w[i, lo + 1:hi + 1] += sgn
    return w


def knot_determinant(so, sx) -> int:
    n = len(so)
    w = winding(so, sx)
    M = np.where(w % 2 == 0, 1.0, -1.0)
    return int(round(abs(np.linalg.det(M)) / 2 ** (n - 1)))


def pd_code(so, sx):
    """PD code, vertical over horizontal, oriented O -> X vertically."""
    n = len(so)
    x_col = {r: c for c, r in enumerate(sx)}
    o_col = {r: c for c, r in enumerate(so)}
    segs = []   # per component, list of (kind, fixed, start, end)
    for comp in components(so, sx):
        path = []
        for c in comp:
            path.append(("V", c, so[c], sx[c]))
            r = sx[c]
            path.append(("H", r, c, o_col[r]))
        segs.append(path)
    allv = [s for p in segs for s in p if s[0] == "V"]
    allh = [s for p in segs for s in p if s[0] == "H"]
    crossings = []
    for v in allv:
        for h in allh:
            c, r = v[1], h[1]
            vlo, vhi = sorted(v[2:])
            hlo, hhi = sorted(h[2:])
            if vlo < r < vhi and hlo < c < hhi:
                crossings.append((c, r))
    idx = {cr: k for k, cr in enumerate(crossings)}
    comp_edges = []
    for path in segs:
        ev = []
        for kind, fixed, a, b in path:
            step = 1 if b > a else -1
            hits = []
            for cr in crossings:
                c, r = cr
                if kind == "V" and c == fixed and min(a, b) < r < max(a, b):
                    hits.append(((r - a) * step, cr, True, (0, step)))
                if kind == "H" and r == fixed and min(a, b) < c < max(a, b):
                    hits.append(((c - a) * step, cr, False, (step, 0)))
            hits.sort()
            ev.extend(h[1:] for h in hits)
        comp_edges.append(ev)
    pd = {}
    lab = 0
    for ev in comp_edges:
        base = lab
        m = len(ev)
        for k, (cr, over, d) in enumerate(ev):
            e_in = base + (k % m)
            e_out = base + ((k + 1) % m)
            pd.setdefault(idx[cr], {})["over" if over else "under"] = (e_in, e_out, d)
        lab += m
    out = []
    for k in range(len(crossings)):
        ui, uo, ud = pd[k]["under"]
        oi, oo, od = pd[k]["over"]
        back = (-ud[0], -ud[1])
        left = (-back[1], back[0])  # ccw of the incoming side
        a = oo if left == od else oi
        b = oi if a == oo else oo
        out.append((ui, a, uo, b))
    return out


def identify(so, sx):
    import snappy
    pd = pd_code(so, sx)
    if not pd:
        return ["unknot"]
    L = snappy.Link(pd)
    L.simplify("global")
    if len(L.crossings) == 0:
        return ["unknot"]
    try:
        return [str(m) for m in L.exterior().identify()]
    except Exception:
        return []
