"""Compiled domain enumeration for large grids.

Mirrors :func:`realgrid.domains._candidates` shape for shape, but a candidate is
described by at most two cyclic rectangles and every test (emptiness, real
index, marker counts) is an O(n) membership query, so no matrices are built.
Agreement with the reference enumerator is covered by the test suite.
"""

from __future__ import annotations

import numpy as np
import numba as nb

KIND_CODES = {"Square": 0, "Hexagon": 1, "Octagon": 2, "Pair": 3}


@nb.njit(cache=True, inline="always")
def _off(a, v, n):
    # (v - a) mod n for a, v in [0, n)
    d = v - a
    return d + n if d < 0 else d


@nb.njit(cache=True, inline="always")
def _inside(a, length, v, n):
    return _off(a, v, n) < length


@nb.njit(cache=True)
def _mult(R, nr, union, c, r, n):
    s = 0
    for k in range(nr):
        if _inside(R[k, 0], R[k, 1], c, n) and _inside(R[k, 2], R[k, 3], r, n):
            s += 1
    if union and s > 1:
        s = 1
    return s


@nb.njit(cache=True)
def _lookup(code, sorted_codes, order):
    lo = 0
    hi = sorted_codes.shape[0]
    while lo < hi:
        mid = (lo + hi) >> 1
        if sorted_codes[mid] < code:
            lo = mid + 1
        else:
            hi = mid
    if lo < sorted_codes.shape[0] and sorted_codes[lo] == code:
        return order[lo]
    return -1


@nb.njit(cache=True)
def _check(pi, y, R, nr, union, n, sig_o, sig_x, tau):
    """Return (ok, nO, nX) for the candidate domain from pi to y."""
    s = 0
    onx = 0
    ony = 0
    for i in range(n):
        for k in range(2):
            r = pi[i] if k == 0 else y[i]
            im = i - 1 if i > 0 else n - 1
            rm = r - 1 if r > 0 else n - 1
            a1 = _mult(R, nr, union, im, rm, n)
            a2 = _mult(R, nr, union, i, rm, n)
            a3 = _mult(R, nr, union, im, r, n)
            a4 = _mult(R, nr, union, i, r, n)
            if a1 >= 1 and a2 >= 1 and a3 >= 1 and a4 >= 1:
                return False, 0, 0
            s += a1 + a2 + a3 + a4
        if pi[i] == tau[i]:
            onx += 1
        if y[i] == tau[i]:
            ony += 1
    if s - 2 * (onx - ony) != 8:
        return False, 0, 0
    no = 0
    nx = 0
    for c in range(n):
        no += _mult(R, nr, union, c, sig_o[c], n)
        nx += _mult(R, nr, union, c, sig_x[c], n)
    return True, no, nx


@nb.njit(cache=True)
def _set_rect(R, k, c0, c1, r0, r1, n):
    R[k, 0] = c0
    R[k, 1] = (c1 - c0) % n
    R[k, 2] = r0
    R[k, 3] = (r1 - r0) % n


@nb.njit(cache=True)
def _code(y, n):
    code = np.uint64(0)
    for i in range(n):
        code |= np.uint64(y[i]) << np.uint64(4 * i)
    return code


@nb.njit(cache=True)
def _strict_point(pi, R, nr, n):
    """True if a point of ``pi`` is strictly inside one of the rectangles; such
    a point is interior to the domain, so the candidate is not empty."""
    for k in range(nr):
        c0, cl, r0, rl = R[k, 0], R[k, 1], R[k, 2], R[k, 3]
        for i in range(n):
            dc = _off(c0, i, n)
            if 0 < dc < cl:
                dr = _off(r0, pi[i], n)
                if 0 < dr < rl:
                    return True
    return False


@nb.njit(cache=True)
def _emit(pi, y, R, nr, union, kind, n, sig_o, sig_x, tau, sorted_codes, order,
          src, out_src, out_tgt, out_kind, out_no, out_nx, cnt, max_no, keep_x):
    if _strict_point(pi, R, nr, n):
        return cnt
    ok, no, nx = _check(pi, y, R, nr, union, n, sig_o, sig_x, tau)
    if not ok or no > max_no or (nx > 0 and not keep_x):
        return cnt
    t = _lookup(_code(y, n), sorted_codes, order)
    if t < 0:
        return -1
    out_src[cnt] = src
    out_tgt[cnt] = t
    out_kind[cnt] = kind
    out_no[cnt] = no
    out_nx[cnt] = nx
    return cnt + 1


@nb.njit(cache=True)
def enumerate_block(states, start, sig_o, sig_x, sorted_codes, order, max_no, keep_x,
                    out_src, out_tgt, out_kind, out_no, out_nx):
    """Fill output buffers from state ``start`` on; stop before a state whose
    domains might overflow.  Returns (next_state, count)."""
    N, n = states.shape
    cap = out_src.shape[0]
    per_state = 2 * n * n * n + 4 * n * n + 4 * n
    tau = np.empty(n, np.int64)
    for i in range(n):
        tau[i] = (n - i) % n
    R = np.zeros((2, 4), np.int64)
    y = np.empty(n, np.int64)
    pi = np.empty(n, np.int64)
    inner = np.empty(n, np.int64)
    cnt = 0
    s = start
    while s < N and cnt + per_state <= cap:
        for i in range(n):
            pi[i] = states[s, i]
        for i in range(n):
            if pi[i] == tau[i]:
                continue
            j = tau[pi[i]]
            # square
            _set_rect(R, 0, i, j, pi[i], tau[i], n)
            for q in range(n):
                y[q] = pi[q]
            y[i] = tau[i]
            y[j] = pi[i]
            cnt = _emit(pi, y, R, 1, False, 0, n, sig_o, sig_x, tau, sorted_codes, order,
                        s, out_src, out_tgt, out_kind, out_no, out_nx, cnt, max_no, keep_x)
            if cnt < 0:
                return s, -1
            ninner = 0
            span = (j - i) % n
            for t in range(1, span):
                k = (i + t) % n
                if pi[k] == tau[k]:
                    inner[ninner] = k
                    ninner += 1
            for a in range(ninner):
                k = inner[a]
                for typ in range(2):
                    for q in range(n):
                        y[q] = pi[q]
                    if typ == 0:
                        _set_rect(R, 0, i, j, pi[i], tau[k], n)
                        _set_rect(R, 1, k, j, tau[k], tau[i], n)
                        y[j] = pi[i]
                        y[k] = tau[i]
                        y[i] = tau[k]
                    else:
                        _set_rect(R, 0, i, j, tau[k], tau[i], n)
                        _set_rect(R, 1, i, k, pi[i], tau[k], n)
                        y[k] = pi[i]
                        y[j] = tau[k]
                        y[i] = tau[i]
                    cnt = _emit(pi, y, R, 2, False, 1, n, sig_o, sig_x, tau, sorted_codes, order,
                                s, out_src, out_tgt, out_kind, out_no, out_nx, cnt, max_no, keep_x)
                    if cnt < 0:
                        return s, -1
            for a in range(ninner):
                k1 = inner[a]
                for b in range(a + 1, ninner):
                    k2 = inner[b]
                    _set_rect(R, 0, k1, j, tau[k2], tau[i], n)
                    _set_rect(R, 1, i, k2, pi[i], tau[k1], n)
                    for q in range(n):
                        y[q] = pi[q]
                    y[k2] = pi[i]
                    y[j] = tau[k2]
                    y[k1] = tau[i]
                    y[i] = tau[k1]
                    cnt = _emit(pi, y, R, 2, True, 2, n, sig_o, sig_x, tau, sorted_codes, order,
                                s, out_src, out_tgt, out_kind, out_no, out_nx, cnt, max_no, keep_x)
                    if cnt < 0:
                        return s, -1
        if keep_x:
            for c in range(n):
                c1 = (c + 1) % n
                if pi[c] == tau[c] and pi[c1] == tau[c1]:
                    R[0, 0] = c
                    R[0, 1] = 1
                    R[0, 2] = 0
                    R[0, 3] = n
                    R[1, 0] = 0
                    R[1, 1] = n
                    R[1, 2] = n - 1 - c
                    R[1, 3] = 1
                    for q in range(n):
                        y[q] = pi[q]
                    y[c] = tau[c1]
                    y[c1] = tau[c]
                    cnt = _emit(pi, y, R, 2, True, 2, n, sig_o, sig_x, tau, sorted_codes, order,
                                s, out_src, out_tgt, out_kind, out_no, out_nx, cnt, max_no, keep_x)
                    if cnt < 0:
                        return s, -1
        for a in range(n):
            if pi[a] == tau[a]:
                continue
            ma = tau[pi[a]]
            for b in range(n):
                if b == a or pi[b] == tau[b]:
                    continue
                mb = tau[pi[b]]
                if ma == a or ma == b or mb == a or mb == b:
                    continue
                # {r, R(r)} is produced from (a, b) and from (mb, ma); keep one
                if mb < a:
                    continue
                _set_rect(R, 0, a, b, pi[a], pi[b], n)
                _set_rect(R, 1, mb, ma, tau[b], tau[a], n)
                for q in range(n):
                    y[q] = pi[q]
                y[a] = pi[b]
                y[b] = pi[a]
                y[mb] = tau[a]
                y[ma] = tau[b]
                cnt = _emit(pi, y, R, 2, False, 3, n, sig_o, sig_x, tau, sorted_codes, order,
                            s, out_src, out_tgt, out_kind, out_no, out_nx, cnt, max_no, keep_x)
                if cnt < 0:
                    return s, -1
        s += 1
    return s, cnt


# ---------------------------------------------------------------------------
# real states


@nb.njit(cache=True)
def involution_rows(n, count):
    """Rows ``sigma o tau`` for every involution ``sigma`` of {0..n-1}, in the
    order of :func:`realgrid.states._involutions` (fixed point first, then
    partners in increasing order)."""
    out = np.empty((count, n), np.int8)
    tau = np.empty(n, np.int64)
    for i in range(n):
        tau[i] = (n - i) % n
    sigma = np.full(n, -1, np.int64)
    stack_i = np.empty(n, np.int64)
    stack_j = np.empty(n, np.int64)
    depth = 0
    k = 0
    i = 0
    cand = 0
    while True:
        while cand < n and cand != i and sigma[cand] >= 0:
            cand += 1
        if cand >= n:
            if depth == 0:
                break
            depth -= 1
            i = stack_i[depth]
            j = stack_j[depth]
            sigma[i] = -1
            sigma[j] = -1
            cand = j + 1
            continue
        sigma[i] = cand
        sigma[cand] = i
        stack_i[depth] = i
        stack_j[depth] = cand
        depth += 1
        ni = i + 1
        while ni < n and sigma[ni] >= 0:
            ni += 1
        if ni < n:
            i = ni
            cand = ni
            continue
        for q in range(n):
            out[k, q] = sigma[tau[q]]
        k += 1
        depth -= 1
        sigma[i] = -1
        sigma[cand] = -1
        cand += 1
    return out


# ---------------------------------------------------------------------------
# tilde reduction helpers


@nb.njit(cache=True)
def mod2_segments(src, tgt):
    """Cancel repeated (src, tgt) pairs in place for arrays grouped by source.
    Returns the number of surviving entries (a prefix of the arrays)."""
    m = src.shape[0]
    w = 0
    a = 0
    while a < m:
        b = a
        while b < m and src[b] == src[a]:
            b += 1
        seg = np.sort(tgt[a:b])
        q = 0
        while q < seg.shape[0]:
            r = q
            while r < seg.shape[0] and seg[r] == seg[q]:
                r += 1
            if (r - q) % 2 == 1:
                src[w] = src[a]
                tgt[w] = seg[q]
                w += 1
            q = r
        a = b
    return w


@nb.njit(cache=True)
def _csr(N, keys, vals):
    ptr = np.zeros(N + 1, np.int64)
    for k in keys:
        ptr[k + 1] += 1
    for v in range(N):
        ptr[v + 1] += ptr[v]
    fill = ptr[:-1].copy()
    idx = np.empty(keys.shape[0], np.int32)
    for e in range(keys.shape[0]):
        idx[fill[keys[e]]] = vals[e]
        fill[keys[e]] += 1
    return ptr, idx


@nb.njit(cache=True)
def _drop(v, ptr_o, idx_o, ptr_i, idx_i, alive, outdeg, indeg, queued, stack, top):
    for p in range(ptr_o[v], ptr_o[v + 1]):
        w = idx_o[p]
        if alive[w]:
            indeg[w] -= 1
            if indeg[w] == 1 and not queued[w]:
                queued[w] = True
                stack[top] = w
                top += 1
    for p in range(ptr_i[v], ptr_i[v + 1]):
        z = idx_i[p]
        if alive[z]:
            outdeg[z] -= 1
            if outdeg[z] == 1 and not queued[z]:
                queued[z] = True
                stack[top] = z
                top += 1
    return top


@nb.njit(cache=True)
def peel(N, src, tgt):
    """Cancel entries with a degree-one endpoint until none is left.  Such a
    cancellation creates no new entries, so the remaining entries among live
    generators are exactly the original ones.  Returns the live mask."""
    ptr_o, idx_o = _csr(N, src, tgt)
    ptr_i, idx_i = _csr(N, tgt, src)
    alive = np.ones(N, np.bool_)
    outdeg = np.empty(N, np.int32)
    indeg = np.empty(N, np.int32)
    queued = np.zeros(N, np.bool_)
    stack = np.empty(N, np.int32)
    top = 0
    for v in range(N):
        outdeg[v] = ptr_o[v + 1] - ptr_o[v]
        indeg[v] = ptr_i[v + 1] - ptr_i[v]
        if outdeg[v] == 1 or indeg[v] == 1:
            queued[v] = True
            stack[top] = v
            top += 1
    while top > 0:
        top -= 1
        v = stack[top]
        queued[v] = False
        if not alive[v]:
            continue
        x = -1
        y = -1
        if outdeg[v] == 1:
            for p in range(ptr_o[v], ptr_o[v + 1]):
                if alive[idx_o[p]]:
                    x = v
                    y = idx_o[p]
                    break
        elif indeg[v] == 1:
            for p in range(ptr_i[v], ptr_i[v + 1]):
                if alive[idx_i[p]]:
                    x = idx_i[p]
                    y = v
                    break
        if x < 0:
            continue
        alive[x] = False
        alive[y] = False
        top = _drop(x, ptr_o, idx_o, ptr_i, idx_i, alive, outdeg, indeg, queued, stack, top)
        top = _drop(y, ptr_o, idx_o, ptr_i, idx_i, alive, outdeg, indeg, queued, stack, top)
    return alive
