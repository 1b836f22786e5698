import numpy as np
import pytest

from realgrid.corpus import corpus_get
from realgrid.diagram import Diagram, validate
from realgrid.domains import KINDS, domain_arrays, domain_stats, interior_empty, successors
from realgrid.oracle import brute_domains
from realgrid.states import State, enumerate_states, real_maslov, state_array


def _constructive(d):
    out = set()
    for x in enumerate_states(d.n):
        for dm in successors(d, x, avoid_x=False):
            out.add((x.pi, dm.target.pi, dm.mult, dm.nO, dm.nX))
    return out


SMALL = [corpus_get("unknot3"), Diagram(3, (2, 0, 1), (0, 1, 2)), corpus_get("trefoil5")]


@pytest.mark.slow
@pytest.mark.parametrize("d", SMALL, ids=lambda d: str(d))
def test_oracle_matches_enumerator(d):
    assert brute_domains(d) == _constructive(d)


@pytest.mark.parametrize("name", ["unknot3", "trefoil5", "fig8", "6_1"])
def test_grading_drop_identity(name):
    d = corpus_get(name)
    lf = validate(d).l_f
    for x in enumerate_states(d.n):
        for dm in successors(d, x, avoid_x=False):
            y = dm.target
            assert real_maslov(d, x, "O", lf) - real_maslov(d, y, "O", lf) == 1 - dm.nO
            assert real_maslov(d, x, "X", lf) - real_maslov(d, y, "X", lf) == 1 - dm.nX
            assert interior_empty(dm)


def test_trefoil_calibration_counts():
    st = domain_stats(corpus_get("trefoil5"))
    assert st.generators == 26
    assert st.total == 61
    assert all(st.per_kind[k] > 0 for k in KINDS)


@pytest.mark.parametrize("name", ["trefoil5", "fig8", "6_2"])
def test_kernel_matches_reference(name):
    d = corpus_get(name)
    arr = state_array(d.n)
    da = domain_arrays(d, arr)
    got = sorted(zip(da.src.tolist(), da.tgt.tolist(), da.nO.tolist()))
    ref = []
    index = {tuple(row): i for i, row in enumerate(arr.tolist())}
    for i, row in enumerate(arr.tolist()):
        for dm in successors(d, State.from_pi(row)):
            ref.append((i, index[dm.target.pi], dm.nO))
    assert got == sorted(ref)
