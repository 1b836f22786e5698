from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from realgrid.complexes import MINUS, TILDE, build_complex, check_d_squared, tilde_part
from realgrid.corpus import corpus_get
from realgrid.homology import (BigradedDims, DivisionError, UModule, divide_w, hat_from_minus, homology_both,
                               homology_f2, homology_over_u, result_json, tensor_w)

cells = st.dictionaries(st.tuples(st.integers(-4, 4), st.integers(-6, 6)), st.integers(1, 3), max_size=6)


@given(cells, st.integers(0, 4))
def test_divide_inverts_tensor(dims, k):
    assert divide_w(tensor_w(dims, k), k) == BigradedDims(dims)


@given(cells.filter(bool))
def test_tensor_doubles_total(dims):
    assert tensor_w(dims).total == 2 * BigradedDims(dims).total


def test_division_failure_raises():
    with pytest.raises(DivisionError):
        divide_w(BigradedDims({(0, 0): 1}), 1)


modules = st.builds(
    lambda tw, ts: UModule.from_counters(Counter([tw]), Counter(ts)),
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
    st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 3)), st.integers(1, 2),
                    max_size=3))


@given(modules)
def test_hat_from_minus_is_odd(mod):
    assert hat_from_minus(mod).total % 2 == 1


@given(modules, st.integers(0, 2))
@settings(max_examples=50)
def test_divide_module_inverts_tensor(mod, k):
    towers = Counter()
    for key, v in tensor_w(mod.tower_counter(), k).items():
        towers[key] += v
    torsion = Counter()
    for o in {o for _, _, o, _ in mod.torsion}:
        part = {(m, a): v for (m, a, oo), v in mod.torsion_counter().items() if oo == o}
        for (m, a), v in tensor_w(part, k).items():
            torsion[(m, a, o)] += v
    assert divide_w(UModule.from_counters(towers, torsion), k) == mod


def _rank_f2(M):
    M = M.copy() % 2
    r = 0
    rows, cols = M.shape
    for c in range(cols):
        piv = np.nonzero(M[r:, c])[0]
        if piv.size == 0:
            continue
        p = r + piv[0]
        M[[r, p]] = M[[p, r]]
        hit = np.nonzero(M[:, c])[0]
        hit = hit[hit != r]
        M[hit] ^= M[r]
        r += 1
        if r == rows:
            break
    return r


def _dense_homology(c):
    """Per-bigrading homology from dense F_2 ranks of the tilde differential."""
    keys = sorted({(int(m), int(a)) for m, a in zip(c.m, c.a2)})
    idx = {k: [i for i in range(c.generators) if (c.m[i], c.a2[i]) == k] for k in keys}
    D = np.zeros((c.generators, c.generators), dtype=np.uint8)
    for s, t in zip(c.src.tolist(), c.tgt.tolist()):
        D[t, s] ^= 1
    out = {}
    for (m, a), gens in idx.items():
        below = idx.get((m - 1, a), [])
        above = idx.get((m + 1, a), [])
        r_out = _rank_f2(D[np.ix_(below, gens)]) if below else 0
        r_in = _rank_f2(D[np.ix_(gens, above)]) if above else 0
        out[(m, a)] = len(gens) - r_out - r_in
    return BigradedDims(out)


@pytest.mark.parametrize("name", ["trefoil5", "fig8", "5_2"])
def test_cancellation_matches_dense_ranks(name):
    c = build_complex(corpus_get(name), TILDE)
    assert homology_f2(c) == _dense_homology(c)


@pytest.mark.parametrize("name", ["trefoil5", "fig8"])
def test_d_squared_and_shared_pass(name):
    full = build_complex(corpus_get(name), MINUS)
    assert check_d_squared(full)
    assert check_d_squared(tilde_part(full))
    tilde, mod = homology_both(full)
    assert tilde == homology_f2(tilde_part(full))
    assert mod == homology_over_u(full)


def test_minus_entries_are_homogeneous():
    c = build_complex(corpus_get("fig8"), MINUS)
    for s, t, e in zip(c.src.tolist(), c.tgt.tolist(), c.e.tolist()):
        assert c.m[s] - c.m[t] == 1 - e
        assert c.a2[t] - c.a2[s] == e


def test_result_json_schema():
    import json
    obj = json.loads(result_json("minus", BigradedDims({(0, 0): 1}), UModule([(0, 0)], [])))
    assert obj == {"flavor": "minus", "bigraded": [{"m": 0, "a2": 0, "dim": 1}],
                   "module": {"towers": [{"m": 0, "a2": 0}], "torsion": []}}
