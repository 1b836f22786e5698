import pytest
from hypothesis import given, strategies as st

from realgrid.corpus import corpus_get
from realgrid.diagram import Diagram, DiagramError, swap_markers, transpose
from realgrid.invariants import (LaurentPoly, PolyDivisionError, alexander_from_hat, alexander_polynomial,
                                 delta_profile, swap_alexander, swap_regrade, tau_r, torsion_order,
                                 verify_diagram_suite, verify_skein)
from realgrid.homology import UModule

polys = st.dictionaries(st.integers(-5, 5), st.integers(-4, 4), max_size=5).map(LaurentPoly)


@given(polys, polys)
def test_exact_division_inverts_product(p, q):
    if q:
        assert (p * q).exact_div(q) == p


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        LaurentPoly({0: 1}).exact_div(LaurentPoly({0: 1, 1: 1}))


@pytest.mark.parametrize("coeffs, text", [
    ({-2: -1, 0: 3, 2: -1}, "-t^-2 + 3 - t^2"),
    ({0: 1}, "1"),
    ({}, "0"),
    ({-1: -2, 0: 1, 1: 2}, "-2*t^-1 + 1 + 2*t"),
])
def test_format(coeffs, text):
    assert LaurentPoly(coeffs).format() == text


@given(polys)
def test_swap_alexander_is_involution(p):
    assert swap_alexander(swap_alexander(p)) == p


def test_polynomial_refuses_periodic():
    with pytest.raises(DiagramError):
        alexander_polynomial(Diagram(3, (0, 2, 1), (1, 0, 2)))


def test_tau_and_order():
    mod = UModule([(1, 1)], [(0, 0, 1, 1), (0, 0, 3, 1)])
    assert tau_r(mod) == -1 and torsion_order(mod) == 3
    with pytest.raises(ValueError):
        tau_r(UModule([(0, 0), (1, 1)], []))


def test_delta_profile_and_regrade():
    h = {(0, -1): 1, (0, 0): 1, (1, 1): 1}
    assert delta_profile(h) == {0: 1, 1: 2}
    assert swap_regrade(swap_regrade(h)) == h


def test_alexander_from_hat_trefoil(inv):
    k = inv("trefoil5")
    assert alexander_from_hat(k.hat) == k.alexander


@pytest.mark.parametrize("name", ["trefoil5", "fig8", "8_20a"])
def test_symmetry_relations(name, inv):
    d = corpus_get(name)
    base = inv(name, False)
    from realgrid.invariants import knot_invariants
    assert knot_invariants(transpose(d), minus=False).hat == base.hat
    sw = knot_invariants(swap_markers(d), minus=False)
    assert sw.hat == swap_regrade(base.hat)
    assert sw.alexander == swap_alexander(base.alexander)


def test_skein_triple():
    res = verify_skein(corpus_get("skein_plus"), corpus_get("skein_minus"), corpus_get("skein_zero"))
    assert res.holds and not res.residual


def test_skein_rejects_nonlocal_triple():
    with pytest.raises(DiagramError):
        verify_skein(corpus_get("fig8"), corpus_get("fig8"), corpus_get("fig8"))
    with pytest.raises(DiagramError):
        verify_skein(corpus_get("skein_plus"), corpus_get("twist_T2_1").with_markers(
            (6, 5, 4, 3, 2, 1, 0), (1, 0, 6, 5, 4, 3, 2)), corpus_get("skein_zero"))


@pytest.mark.parametrize("name", ["unknot3", "trefoil5", "fig8"])
def test_suite_passes(name):
    rep = verify_diagram_suite(corpus_get(name), moves=2, seed=1)
    assert rep.ok, rep.to_text()
    assert rep.to_text().endswith("OK")


def test_suite_counts_trefoil():
    rep = verify_diagram_suite(corpus_get("trefoil5"))
    counts = next(c for c in rep.checks if c.name == "counts")
    assert counts.actual == "generators=26 domains=61"
