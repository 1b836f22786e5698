import random

import pytest

from realgrid.corpus import corpus_get
from realgrid.diagram import (DOUBLY_PERIODIC, STRONGLY_INVERTIBLE, Diagram, DiagramError, ParseError,
                              apply_move, commutable_columns, cyclic_shift, legal_moves, off_axis_x_cells,
                              parse_diagram, random_moves, real_commutation, real_stabilization, rho_cell,
                              swap_markers, transpose, validate)
from realgrid.invariants import alexander_polynomial

TREFOIL_TEXT = "n=5\nO=0 1 2 3 4\nX=2 3 4 0 1\nname=trefoil5\n"


def test_parse_roundtrip():
    d = parse_diagram(TREFOIL_TEXT)
    assert d.n == 5 and d.sigma_x == (2, 3, 4, 0, 1)
    assert parse_diagram(d.to_rgd()) == d


def test_parse_comments_and_meta():
    d = parse_diagram("# grid\nn=3\nO=0 1 2  # diagonal\nX=2 0 1\nmeta.knot=0_1\n")
    assert d.meta == {"knot": "0_1"}


@pytest.mark.parametrize("text, msg", [
    ("O=0 1 2\nX=2 0 1\n", "missing n"),
    ("n=3\nX=2 0 1\n", "missing O"),
    ("n=3\nO=0 1\nX=2 0 1\n", "expected 3 entries"),
    ("n=3\nO=0 0 2\nX=2 0 1\n", "duplicate row"),
    ("n=3\nO=0 1 5\nX=2 0 1\n", "out of range"),
    ("n=3\nO=0 1 2\nX=0 2 1\n", "share cell"),
    ("n=x\nO=0\nX=0\n", "integer"),
    ("n=3\nO=0 1 2\nX=2 0 1\ncolour=red\n", "unknown key"),
    ("n=3\nO=0 1 2\nX=2 0 1\ngarbage\n", "key=value"),
])
def test_parse_errors(text, msg):
    with pytest.raises(ParseError, match=msg):
        parse_diagram(text)


def test_rho_is_an_involution():
    for n in (3, 5, 8):
        for c in range(n):
            for r in range(n):
                assert rho_cell(n, *rho_cell(n, c, r)) == (c, r)


def test_validate_classifies():
    assert validate(corpus_get("trefoil5")).classification == STRONGLY_INVERTIBLE
    assert validate(Diagram(3, (0, 2, 1), (1, 0, 2))).classification == DOUBLY_PERIODIC


def test_validate_rejects_asymmetric():
    with pytest.raises(DiagramError):
        validate(Diagram(4, (1, 0, 2, 3), (3, 2, 0, 1)))


def test_validate_expect():
    with pytest.raises(DiagramError):
        validate(corpus_get("trefoil5"), expect=DOUBLY_PERIODIC)


def test_symmetries_stay_symmetric():
    d = corpus_get("8_20a")
    for e in (transpose(d), swap_markers(d), cyclic_shift(d, 4)):
        assert validate(e).classification == STRONGLY_INVERTIBLE


def test_shift_full_turn_is_identity():
    d = corpus_get("fig8")
    assert cyclic_shift(d, d.n) == d


def test_commutation_and_stabilization_preserve_polynomial():
    d = corpus_get("fig8")
    ref = alexander_polynomial(d)
    for c in commutable_columns(d):
        assert alexander_polynomial(real_commutation(d, c)) == ref
    for cell in off_axis_x_cells(d):
        e = real_stabilization(d, cell)
        assert e.n == d.n + 2
        assert alexander_polynomial(e) == ref


def test_stabilization_needs_off_axis_x():
    d = corpus_get("trefoil5")
    on_axis = next((c, r) for c, r in d.x_cells() if r == d.n - 1 - c)
    with pytest.raises(DiagramError):
        real_stabilization(d, on_axis)


def test_legal_moves_respect_size_cap():
    d = corpus_get("trefoil5")
    assert all(kind != "stabilize" for kind, _ in legal_moves(d, max_size=6))
    assert any(kind == "stabilize" for kind, _ in legal_moves(d, max_size=7))


def test_random_moves_reproducible():
    d = corpus_get("unknot3")
    a = random_moves(d, random.Random(3), 4, max_size=7)
    b = random_moves(d, random.Random(3), 4, max_size=7)
    assert a == b
    e = d
    for mv in a[1]:
        e = apply_move(e, mv)
    assert e == a[0]
