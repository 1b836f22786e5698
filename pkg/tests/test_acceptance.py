"""Acceptance criteria 1-12.  Each test records one PASS/FAIL line, printed in
the terminal summary (see conftest.py) and when run as a script."""

import random
import resource
import time

import pytest

from realgrid.complexes import TILDE, build_complex
from realgrid.corpus import corpus_get, corpus_names
from realgrid.diagram import Diagram, STRONGLY_INVERTIBLE, random_moves, swap_markers, transpose, validate
from realgrid.domains import successors
from realgrid.homology import DivisionError, hat_from_minus
from realgrid.invariants import (alexander_polynomial, knot_invariants, swap_alexander, swap_regrade,
                                 verify_skein)
from realgrid.oracle import brute_domains
from realgrid.states import count_states, enumerate_states, real_maslov

from conftest import MINUS_LIMIT, invariants_of

RESULTS: dict[int, tuple[bool, str]] = {}


def record(k: int, ok: bool, detail: str) -> None:
    RESULTS[k] = (ok, detail)
    print(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def hat_of(*cells):
    return {(m, a): (v[0] if v else 1) for m, a, *v in cells}


def module(k):
    return sorted(k.minus.towers), sorted(k.minus.torsion)


def timed(fn, *args, **kw):
    t = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t


@pytest.fixture(scope="module", autouse=True)
def warm_kernels():
    # load the compiled kernels once so runtime checks time the computation
    knot_invariants(corpus_get("fig8"))


def test_criterion_01_unknot():
    k, dt = timed(knot_invariants, corpus_get("unknot3"))
    ok = (k.hat == hat_of((0, 0)) and k.minus.towers == [(0, 0)] and not k.minus.torsion
          and k.alexander.format() == "1" and k.tau == 0 and k.order == 0 and dt < 1.0)
    record(1, ok, f"hat={dict(k.hat)} minus={module(k)} poly={k.alexander} tau={k.tau} ord={k.order} {dt:.2f}s")


def test_criterion_02_mirror_trefoil():
    d = corpus_get("trefoil5")
    k, dt = timed(knot_invariants, d)
    ok = (count_states(5) == 26 and k.generators == 26 and k.domains == 61
          and k.hat == hat_of((0, -1), (0, 0), (1, 1))
          and module(k) == ([(1, 1)], [(0, 0, 1, 1)]) and k.tau == -1 and dt < 1.0)
    record(2, ok, f"generators={k.generators} domains={k.domains} hat={dict(k.hat)} minus={module(k)} "
                  f"tau={k.tau} {dt:.2f}s")


def test_criterion_03_figure_eight():
    k = invariants_of("fig8")
    ok = (k.hat == hat_of((-1, -1), (0, 0), (0, 1)) and module(k) == ([(-1, -1)], [(0, 1, 1, 1)])
          and k.tau == 1)
    record(3, ok, f"hat={dict(k.hat)} minus={module(k)} tau={k.tau}")


def test_criterion_04_stevedore():
    k = invariants_of("6_1")
    ok = (module(k) == ([(-1, -1)], [(0, 1, 1, 1), (0, 1, 2, 1)]) and k.order == 2
          and k.alexander.format() == "-2*t^-1 + 1 + 2*t")
    record(4, ok, f"minus={module(k)} ord={k.order} poly={k.alexander}")


DIR_A = hat_of((-1, -2), (-1, -1), (0, -1), (0, 0, 3), (1, 2))
DIR_B = hat_of((-1, -2), (0, 0, 3), (0, 1), (1, 1), (1, 2))
DIRECTION = {
    "8_19": (hat_of((0, -3), (0, -2), (1, 0), (2, 2), (3, 3)), "t^-3 + t^-2 - 1 + t^2 - t^3"),
    "8_20a": (DIR_A, "-t^-2 + 3 - t^2"),
    "8_20b": (DIR_B, "-t^-2 + 3 - t^2"),
    "9_42a": (DIR_A, "-t^-2 + 3 - t^2"),
    "9_42b": (DIR_B, "-t^-2 + 3 - t^2"),
}


def test_criterion_05_direction_dependence():
    bad = []
    for name, (hat, poly) in DIRECTION.items():
        k = invariants_of(name)
        if k.hat != hat or k.alexander.format() != poly:
            bad.append(f"{name}: hat={dict(k.hat)} poly={k.alexander}")
    swapped = knot_invariants(swap_markers(corpus_get("9_42a")), minus=False)
    if swapped.hat != DIR_B:
        bad.append(f"swap(9_42a): hat={dict(swapped.hat)}")
    record(5, not bad, "; ".join(bad) or f"{len(DIRECTION)} diagrams and swap(9_42a) match")


SUMS = {
    "sum_3_1_4_1": (DIR_B, ([(0, 0)], [(0, 0, 2, 1), (0, 1, 1, 1), (1, 2, 1, 1)])),
    "sum_3_1_5_1": (hat_of((0, -3), (0, -2, 2), (1, -1), (1, 0, 3), (2, 1), (2, 2, 2), (3, 3)),
                    ([(3, 3)], [(0, -2, 1, 1), (1, 0, 1, 1), (1, 0, 2, 1), (2, 2, 1, 1), (2, 2, 2, 1)])),
    "sum_3_1_5_2": (hat_of((0, -1), (0, 0), (1, 1)), ([(1, 1)], [(0, 0, 1, 1)])),
}


def test_criterion_06_connected_sums():
    bad = []
    for name, (hat, mod) in SUMS.items():
        k = invariants_of(name)
        if k.hat != hat or module(k) != mod:
            bad.append(f"{name}: hat={dict(k.hat)} minus={module(k)}")
    order2 = sum(1 for *_, o, v in invariants_of("sum_3_1_5_1").minus.torsion if o == 2 for _ in range(v))
    if order2 != 2:
        bad.append(f"3_1#5_1 has {order2} order-2 summands")
    record(6, not bad, "; ".join(bad) or "3 sums match, 3_1#5_1 has two order-2 summands")


SIZE15 = "sum_3_1_5_1_s13"      # stabilized once more to reach size 15


def battery(name):
    """Failures of the per-diagram consistency checks."""
    try:
        k = invariants_of(name)
    except DivisionError as exc:
        return [f"{name}: W-division {exc}"]
    bad = [f"{name}: d^2 {fl}" for fl, ok in k.d_squared.items() if not ok]
    if k.tilde.total != k.hat.total * 2 ** k.k:
        bad.append(f"{name}: tilde {k.tilde.total} != hat {k.hat.total} * 2^{k.k}")
    if k.trace.is_knot:
        if k.hat.total % 2 == 0:
            bad.append(f"{name}: even hat total")
        if k.minus is not None:
            tw = k.minus.towers
            if len(tw) != 1 or tw[0][0] != tw[0][1]:
                bad.append(f"{name}: towers {tw}")
            if hat_from_minus(k.minus) != k.hat:
                bad.append(f"{name}: hat from minus differs")
    return bad


def size15_divisibility():
    """Tilde at size 15 is hat times 2^7; several minutes and about 2 GB."""
    from realgrid.diagram import off_axis_x_cells, real_stabilization
    d = corpus_get(SIZE15)
    d = real_stabilization(d, off_axis_x_cells(d)[0])
    k = knot_invariants(d, minus=False)
    ok = k.k == 7 and k.tilde.total == 128 * k.hat.total and k.hat == invariants_of(SIZE15).hat
    return ok, k.tilde.total


@pytest.mark.slow
def test_criterion_07_consistency_battery():
    bad = []
    for name in corpus_names():
        bad += battery(name)
    try:
        ok15, total = size15_divisibility()
        if not ok15:
            bad.append(f"size 15: tilde total {total} is not 128 * hat or hat changed")
        note = f"size-15 tilde total {total} = 128 * {total // 128}"
    except MemoryError as exc:
        bad.append(f"size 15 divisibility not computed: {exc!r}")
        note = ""
    record(7, not bad, "; ".join(bad) or f"{len(corpus_names())} entries clean; {note}")


MOVE_SEQUENCES = 20
MOVE_LENGTH = 3


def move_summary(d, with_minus):
    k = knot_invariants(d, minus=with_minus)
    return (tuple(k.hat.items_sorted()), str(k.alexander)) + ((k.tau, k.order) if with_minus else ())


@pytest.mark.slow
def test_criterion_08_move_invariance():
    bad = []
    checked = 0
    for name in corpus_names():
        d = corpus_get(name)
        cap = max(d.n, MINUS_LIMIT)
        rng = random.Random(name)
        cache = {}
        base = invariants_of(name)
        for i in range(MOVE_SEQUENCES):
            e, seq = random_moves(d, rng, MOVE_LENGTH, max_size=cap)
            with_minus = e.n <= MINUS_LIMIT
            key = (e.sigma_o, e.sigma_x)
            if key not in cache:
                cache[key] = move_summary(e, with_minus)
            ref = (tuple(base.hat.items_sorted()), str(base.alexander))
            if with_minus:
                ref += (base.tau, base.order)
            checked += 1
            if cache[key] != ref:
                bad.append(f"{name} {seq}: {cache[key]} != {ref}")
    record(8, not bad, "; ".join(bad[:5]) or f"{checked} sequences over {len(corpus_names())} entries unchanged")


@pytest.mark.slow
def test_criterion_09_symmetries():
    bad = []
    for name in corpus_names():
        d = corpus_get(name)
        base = invariants_of(name)
        tr = knot_invariants(transpose(d), minus=False)
        sw = knot_invariants(swap_markers(d), minus=False)
        if tr.hat != base.hat:
            bad.append(f"{name}: transpose hat")
        if sw.hat != swap_regrade(base.hat):
            bad.append(f"{name}: swap hat")
        # regrading (m, a2) -> (m - a2, -a2) sends sum (-1)^m t^a2 to p(-1/t)
        if sw.alexander != swap_alexander(base.alexander):
            bad.append(f"{name}: swap polynomial")
    record(9, not bad, "; ".join(bad) or f"{len(corpus_names())} entries: transpose and swap relations hold")


def test_criterion_10_skein():
    res = verify_skein(corpus_get("skein_plus"), corpus_get("skein_minus"), corpus_get("skein_zero"))
    record(10, res.holds, f"({res.plus}) - ({res.minus}) - (t - t^-1)({res.zero}) = {res.residual}")


def strongly_invertible(n):
    import itertools
    out = []
    for o in itertools.permutations(range(n)):
        for x in itertools.permutations(range(n)):
            if any(a == b for a, b in zip(o, x)):
                continue
            d = Diagram(n, o, x)
            try:
                if validate(d).classification == STRONGLY_INVERTIBLE:
                    out.append(d)
            except ValueError:
                continue
    return out


def small_diagrams():
    """All strongly invertible size-3 diagrams, every tenth size-5 one, and trefoil5
    with its O/X swap."""
    t5 = corpus_get("trefoil5")
    return strongly_invertible(3) + strongly_invertible(5)[::10] + [t5, swap_markers(t5)]


@pytest.mark.slow
def test_criterion_11_small_oracle():
    bad = []
    diagrams = small_diagrams()
    for d in diagrams:
        trace = validate(d)
        cons = set()
        for x in enumerate_states(d.n):
            for dm in successors(d, x, avoid_x=False):
                cons.add((x.pi, dm.target.pi, dm.mult, dm.nO, dm.nX))
                lf = trace.l_f
                drop_o = real_maslov(d, x, "O", lf) - real_maslov(d, dm.target, "O", lf)
                drop_x = real_maslov(d, x, "X", lf) - real_maslov(d, dm.target, "X", lf)
                if drop_o != 1 - dm.nO or drop_x != 1 - dm.nX:
                    bad.append(f"{d}: grading drop")
        if brute_domains(d) != cons:
            bad.append(f"{d}: oracle differs")
    sizes = sorted({d.n for d in diagrams})
    record(11, not bad, "; ".join(bad) or f"{len(diagrams)} diagrams of sizes {sizes}: identical domain sets")


@pytest.mark.slow
def test_criterion_12_capacity():
    d = corpus_get("sum_3_1_5_1_s13")
    k, dt_hat = timed(knot_invariants, d, minus=False)
    p, dt_poly = timed(alexander_polynomial, d)
    rss_gb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 2 ** 20
    ok = dt_hat < 1800 and rss_gb <= 16 and dt_poly < 60 and k.hat.total == 11
    record(12, ok, f"size 13: hat {dt_hat:.0f}s (total {k.hat.total}), poly {dt_poly:.1f}s, "
                   f"peak RSS {rss_gb:.2f} GB")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
