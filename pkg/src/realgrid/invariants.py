"""Real Alexander polynomial, tau^R, torsion order and delta profiles.

Exponents of ``t`` are doubled Alexander gradings: ``t^a2`` stands for ``t^(2A)``,
so all polynomials have integer exponents.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .complexes import MINUS, TILDE, build_complex, check_d_squared, tilde_part
from .diagram import (STRONGLY_INVERTIBLE, Diagram, DiagramError, LinkTrace, apply_move,
                      commutable_columns, off_axis_x_cells, random_moves, swap_markers,
                      transpose, validate)
from .homology import (BigradedDims, DivisionError, UModule, divide_w, hat_from_minus, homology_both, homology_f2,
                       homology_over_u)
from .states import GradingError, gradings_batch, shift_constant, state_array


class PolyDivisionError(ArithmeticError):
    pass


class LaurentPoly:
    """Integer Laurent polynomial in ``t``, stored as ``{exponent: coeff}``."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.c = {int(k): int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self.c == other.c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.c.items())))

    def __bool__(self) -> bool:
        return bool(self.c)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = Counter(self.c)
        for k, v in other.c.items():
            out[k] += v
        return LaurentPoly(out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -v for k, v in self.c.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        out: Counter = Counter()
        for a, x in self.c.items():
            for b, y in other.c.items():
                out[a + b] += x * y
        return LaurentPoly(out)

    def __pow__(self, k: int) -> LaurentPoly:
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, scale: int = 1, sign: int = 1) -> LaurentPoly:
        """Return ``p(sign * t^scale)``; ``scale=-1`` gives ``p(1/t)``."""
        return LaurentPoly({k * scale: v * (sign ** (k % 2)) for k, v in self.c.items()})

    def exact_div(self, d: LaurentPoly) -> LaurentPoly:
        if not d:
            raise ZeroDivisionError("division by zero polynomial")
        rem = Counter(self.c)
        dtop = max(d.c)
        lead = d.c[dtop]
        quo: Counter = Counter()
        floor = min(self.c, default=0) - min(d.c)
        while rem:
            top = max(rem)
            if top - dtop < floor:
                break
            coef = rem[top]
            if coef % lead:
                raise PolyDivisionError("non-integral quotient")
            q = coef // lead
            shift = top - dtop
            quo[shift] += q
            for k, v in d.c.items():
                rem[k + shift] -= q * v
                if rem[k + shift] == 0:
                    del rem[k + shift]
        if rem:
            raise PolyDivisionError("division is not exact")
        return LaurentPoly(quo)

    def format(self, var: str = "t") -> str:
        if not self.c:
            return "0"
        parts = []
        for k in sorted(self.c):
            v = self.c[k]
            mag = abs(v)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in parts[1:]])

    def latex(self) -> str:
        return _latex(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"

    __str__ = format


def _latex(p: LaurentPoly) -> str:
    if not p.c:
        return "0"
    out = []
    for idx, k in enumerate(sorted(p.c)):
        v = p.c[k]
        mag = abs(v)
        body = str(mag) if k == 0 else (("" if mag == 1 else str(mag)) + ("t" if k == 1 else f"t^{{{k}}}"))
        if idx == 0:
            out.append(("-" if v < 0 else "") + body)
        else:
            out.append(("-" if v < 0 else "+") + body)
    return "".join(out)


W_EULER = LaurentPoly({0: 1, -2: -1})          # 1 - t^-2
T_MINUS_TINV = LaurentPoly({1: 1, -1: -1})     # t - t^-1


def _require_si(trace: LinkTrace) -> None:
    if trace.classification != STRONGLY_INVERTIBLE:
        raise DiagramError(f"invariant undefined for a {trace.classification} diagram")


def euler_sum(d: Diagram, trace: LinkTrace | None = None, chunk: int = 1 << 16) -> LaurentPoly:
    """Sum over all real states of (-1)^m t^a2."""
    trace = trace or validate(d)
    pis = state_array(d.n)
    m, a2, _ = gradings_batch(d, pis, trace, chunk=chunk)
    sign = np.where(m % 2 == 0, 1, -1)
    lo = int(a2.min())
    coeffs = np.bincount(a2 - lo, weights=sign).astype(np.int64)
    return LaurentPoly({lo + k: int(v) for k, v in enumerate(coeffs) if v})


def alexander_polynomial(d: Diagram, trace: LinkTrace | None = None) -> LaurentPoly:
    """Euler-characteristic route: no homology is computed."""
    trace = trace or validate(d)
    _require_si(trace)
    k = shift_constant(d.n, trace)
    p = euler_sum(d, trace)
    try:
        p = p.exact_div(W_EULER ** k)
        return p.exact_div(T_MINUS_TINV ** trace.l_p)
    except ArithmeticError as exc:
        raise PolyDivisionError(f"real Alexander polynomial: {exc}") from None


def alexander_from_hat(h: Mapping[tuple[int, int], int], l_p: int = 0) -> LaurentPoly:
    p = LaurentPoly(Counter())
    acc: Counter = Counter()
    for (m, a2), v in h.items():
        acc[a2] += v if m % 2 == 0 else -v
    p = LaurentPoly(acc)
    return p.exact_div(T_MINUS_TINV ** l_p) if l_p else p


def tau_r(mod: UModule) -> int:
    if len(mod.towers) != 1:
        raise ValueError(f"expected exactly one tower, found {len(mod.towers)}")
    return -mod.towers[0][1]


def torsion_order(mod: UModule) -> int:
    return max((o for _, _, o, _ in mod.torsion), default=0)


def delta_profile(h: Mapping[tuple[int, int], int]) -> dict[int, int]:
    """Dimensions bucketed by doubled delta grading 2m - a2."""
    out: Counter = Counter()
    for (m, a2), v in h.items():
        out[2 * m - a2] += v
    return dict(sorted((k, v) for k, v in out.items() if v))


def swap_regrade(h: Mapping[tuple[int, int], int]) -> BigradedDims:
    """Expected hat groups after exchanging O and X: (m, a2) -> (m - a2, -a2)."""
    return BigradedDims({(m - a2, -a2): v for (m, a2), v in h.items()})


def swap_alexander(p: LaurentPoly) -> LaurentPoly:
    """Polynomial after exchanging O and X.  The regrading flips the sign of
    every odd power, so this is p(-1/t)."""
    return p.substitute(scale=-1, sign=-1)


# ---------------------------------------------------------------------------
# bundled computation


@dataclass
class KnotInvariants:
    n: int
    trace: LinkTrace
    generators: int
    domains: int                 # empty real domains avoiding X (minus-tilde differential)
    tilde_domains: int           # those also avoiding O
    k: int                       # number of W factors
    tilde: BigradedDims
    hat: BigradedDims
    alexander: LaurentPoly
    minus: UModule | None = None
    d_squared: dict = field(default_factory=dict)

    @property
    def tau(self) -> int | None:
        return tau_r(self.minus) if self.minus is not None and self.trace.is_knot else None

    @property
    def order(self) -> int | None:
        return torsion_order(self.minus) if self.minus is not None else None

    def summary(self) -> tuple:
        return (tuple(self.hat.items_sorted()), str(self.alexander), self.tau, self.order)


def knot_invariants(d: Diagram, minus: bool = True, trace: LinkTrace | None = None,
                    check: bool = False) -> KnotInvariants:
    """Hat (and optionally minus) homology with the Euler-path polynomial.

    One domain enumeration serves both flavors: the tilde complex is the u^0
    part of the minus-tilde complex.
    """
    trace = trace or validate(d)
    _require_si(trace)
    k = shift_constant(d.n, trace)
    full = build_complex(d, MINUS if minus else TILDE, trace)
    tc = tilde_part(full)
    if minus:
        tilde, raw = homology_both(full)
        mod = divide_w(raw, k)
    else:
        tilde, mod = homology_f2(tc), None
    hat = divide_w(tilde, k)
    squares = {}
    if check:
        squares["tilde"] = check_d_squared(tc)
        if minus:
            squares["minus"] = check_d_squared(full)
    return KnotInvariants(d.n, trace, full.generators, full.n_domains if minus else -1,
                          tc.n_domains, k, tilde, hat, alexander_polynomial(d, trace), mod, squares)


# ---------------------------------------------------------------------------
# verification reports


@dataclass
class Check:
    name: str
    status: str                  # "pass", "fail" or "skip"
    expected: str = ""
    actual: str = ""


@dataclass
class Report:
    subject: str
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def add(self, name: str, passed: bool | None, expected="", actual="") -> None:
        status = "skip" if passed is None else ("pass" if passed else "fail")
        self.checks.append(Check(name, status, str(expected), str(actual)))

    def failures(self) -> list:
        return [c for c in self.checks if c.status == "fail"]

    def to_text(self) -> str:
        lines = [f"# {self.subject}"]
        for c in self.checks:
            line = f"{c.status.upper():4s}  {c.name}"
            if c.status == "skip" and c.actual:
                line += f"  ({c.actual})"
            elif c.status == "fail":
                line += f"  expected={c.expected} actual={c.actual}"
            lines.append(line)
        lines.append("OK" if self.ok else f"FAILED ({len(self.failures())} checks)")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({"subject": self.subject, "ok": self.ok,
                           "checks": [c.__dict__ for c in self.checks]}, sort_keys=True)


def _fmt_dims(h: Mapping) -> str:
    return " ".join(f"({m},{a})^{v}" if v > 1 else f"({m},{a})" for (m, a), v in
                    sorted(h.items(), key=lambda kv: (kv[0][1], kv[0][0]))) or "0"


def _fmt_module(mod: UModule | None) -> str:
    if mod is None:
        return "-"
    parts = [f"U^inf_({m},{a})" for m, a in mod.towers]
    parts += [f"U^{o}_({m},{a})" + (f"^{v}" if v > 1 else "") for m, a, o, v in mod.torsion]
    return " + ".join(parts) or "0"


def verify_diagram_suite(d: Diagram, moves: int = 0, seed: int = 0, minus_limit: int = 11,
                         hat_limit: int = 13, move_length: int = 3, subject: str | None = None) -> Report:
    """Consistency battery for one strongly invertible knot diagram."""
    rep = Report(subject or d.name or str(d))
    trace = validate(d)
    _require_si(trace)
    use_minus = d.n <= minus_limit
    cache: dict = {}

    def inv(e: Diagram, with_minus: bool) -> KnotInvariants:
        key = (e.sigma_o, e.sigma_x, with_minus)
        if key not in cache:
            cache[key] = knot_invariants(e, minus=with_minus)
        return cache[key]

    try:
        base = knot_invariants(d, minus=use_minus, trace=trace, check=True)
    except (DivisionError, GradingError, PolyDivisionError) as exc:
        rep.add("consistency", False, "exact W-division and homogeneous gradings", exc)
        return rep
    cache[(d.sigma_o, d.sigma_x, use_minus)] = base
    rep.add("counts", True, "", f"generators={base.generators} domains={base.domains}")
    rep.add("d_squared.tilde", base.d_squared["tilde"], "0", "0" if base.d_squared["tilde"] else "nonzero")
    if use_minus:
        rep.add("d_squared.minus", base.d_squared["minus"], "0", "0" if base.d_squared["minus"] else "nonzero")
    else:
        rep.add("d_squared.minus", None, "", f"size {d.n} above minus limit {minus_limit}")
    rep.add("tilde.divisibility", base.tilde.total == base.hat.total * 2 ** base.k,
            f"{base.hat.total} * 2^{base.k}", base.tilde.total)
    via_hat = alexander_from_hat(base.hat, trace.l_p)
    rep.add("alexander.paths", via_hat == base.alexander, base.alexander, via_hat)
    knot = trace.is_knot
    rep.add("hat.odd", base.hat.total % 2 == 1 if knot else None, "odd", base.hat.total)
    if base.minus is not None and knot:
        tw = base.minus.towers
        rep.add("minus.single_tower", len(tw) == 1 and tw[0][0] == tw[0][1], "one tower with m = a2",
                _fmt_module(base.minus))
        hfm = hat_from_minus(base.minus)
        rep.add("hat_from_minus", hfm == base.hat, _fmt_dims(base.hat), _fmt_dims(hfm))
    else:
        rep.add("minus.single_tower", None)
        rep.add("hat_from_minus", None)

    tr = inv(transpose(d), False)
    rep.add("transpose.hat", tr.hat == base.hat, _fmt_dims(base.hat), _fmt_dims(tr.hat))
    sw = inv(swap_markers(d), False)
    want = swap_regrade(base.hat)
    rep.add("swap.hat", sw.hat == want, _fmt_dims(want), _fmt_dims(sw.hat))
    want_p = swap_alexander(base.alexander)
    rep.add("swap.alexander", sw.alexander == want_p, want_p, sw.alexander)

    def compare(name: str, e: Diagram) -> None:
        with_minus = use_minus and e.n <= minus_limit
        if e.n > hat_limit:
            rep.add(name, None, "", f"size {e.n} above hat limit {hat_limit}")
            return
        got = inv(e, with_minus)
        ref = base.summary() if with_minus else base.summary()[:2]
        now = got.summary() if with_minus else got.summary()[:2]
        rep.add(name, now == ref, ref, now)

    compare("move.cyclic_shift", apply_move(d, ("shift", 1)))
    cols = commutable_columns(d)
    if cols:
        compare("move.commutation", apply_move(d, ("commute", cols[0])))
    else:
        rep.add("move.commutation", None, "", "no commutable column pair")
    cells = off_axis_x_cells(d)
    compare("move.stabilization", apply_move(d, ("stabilize", cells[0])))
    rng = random.Random(seed)
    for i in range(moves):
        e, seq = random_moves(d, rng, move_length, max_size=max(d.n, minus_limit if use_minus else hat_limit))
        compare(f"moves.{i:02d} " + ",".join(f"{k}:{a}" for k, a in seq), e)
    return rep


# ---------------------------------------------------------------------------
# skein relation


@dataclass
class SkeinResult:
    holds: bool
    plus: LaurentPoly
    minus: LaurentPoly
    zero: LaurentPoly
    residual: LaurentPoly


def _window_cells(d: Diagram, c: int) -> set:
    n = d.n
    cols = {c, c + 1}
    rows = {n - 2 - c, n - 1 - c}
    return {(k, r, t) for t, sig in (("O", d.sigma_o), ("X", d.sigma_x))
            for k, r in enumerate(sig) if k not in cols and r not in rows}


def skein_window(dplus: Diagram, dminus: Diagram, dzero: Diagram) -> int:
    """Smallest column ``c`` such that the three diagrams agree outside columns
    ``c, c+1`` and the mirrored rows."""
    if not dplus.n == dminus.n == dzero.n:
        raise DiagramError("skein triple diagrams must have the same size")
    if (dplus.sigma_o, dplus.sigma_x) == (dminus.sigma_o, dminus.sigma_x):
        raise DiagramError("degenerate skein triple: L+ and L- coincide")
    for c in range(dplus.n - 1):
        w = _window_cells(dplus, c)
        if w == _window_cells(dminus, c) == _window_cells(dzero, c):
            return c
    raise DiagramError("diagrams differ outside every local window")


def verify_skein(dplus: Diagram, dminus: Diagram, dzero: Diagram, window: int | None = None) -> SkeinResult:
    """Check Delta(L+) - Delta(L-) = (t - t^-1) Delta(L0) exactly."""
    found = skein_window(dplus, dminus, dzero)
    if window is not None and window != found:
        w = _window_cells(dplus, window)
        if not (w == _window_cells(dminus, window) == _window_cells(dzero, window)):
            raise DiagramError(f"diagrams differ outside window {window}")
    p, m, z = (alexander_polynomial(x) for x in (dplus, dminus, dzero))
    residual = p - m - T_MINUS_TINV * z
    return SkeinResult(not residual, p, m, z, residual)
