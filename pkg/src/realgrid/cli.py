"""Command-line interface: ``realgrid <subcommand> ...``.

Inputs are ``.rgd`` files or ``corpus:<name>``.  Text output writes bigradings
in the table order ``(2a, m)``, i.e. ``(a2, m)``; JSON output names the fields.

Exit codes: 0 success, 2 invalid input, 3 internal-consistency failure,
4 size above the configured limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .complexes import TILDE, build_complex
from .corpus import corpus_entry, corpus_get, corpus_names
from .diagram import DOUBLY_PERIODIC, Diagram, DiagramError, load_diagram, validate
from .homology import BigradedDims, DivisionError, UModule, result_json, homology_f2
from .invariants import (PolyDivisionError, alexander_polynomial, delta_profile, knot_invariants,
                         verify_diagram_suite)
from .states import GradingError

EXIT_OK, EXIT_INPUT, EXIT_CONSISTENCY, EXIT_CAPACITY = 0, 2, 3, 4
LIMITS = {"minus": 11, "hat": 13, "poly": 17}


class CapacityError(RuntimeError):
    pass


def threads() -> int:
    """Worker count from ``RGH_THREADS``.  Work runs in one deterministic
    thread whatever the value, so output never depends on it."""
    raw = os.environ.get("RGH_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise DiagramError(f"RGH_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise DiagramError(f"RGH_THREADS must be a positive integer, got {raw!r}")
    return value


def load_input(spec: str) -> Diagram:
    if spec.startswith("corpus:"):
        return corpus_get(spec[len("corpus:"):])
    path = Path(spec)
    if not path.is_file():
        raise DiagramError(f"no such file: {spec}")
    return load_diagram(str(path))


def _limit(d: Diagram, kind: str, args) -> None:
    cap = args.max_size if args.max_size is not None else LIMITS[kind]
    if d.n > cap:
        raise CapacityError(f"size {d.n} exceeds the {kind} limit {cap} (override with --max-size)")


# ---------------------------------------------------------------------------
# formatting


def fmt_hat(h: BigradedDims, latex: bool = False) -> str:
    parts = []
    for (m, a), v in h.items_sorted():
        cell = f"({a},{m})"
        if v > 1:
            cell += f"^{{{v}}}" if latex else f"^{v}"
        parts.append(cell)
    if not parts:
        return "0"
    return (r" \oplus " if latex else " + ").join(parts)


def fmt_module(mod: UModule, latex: bool = False) -> str:
    parts = []
    for (m, a), v in sorted(mod.tower_counter().items(), key=lambda kv: (kv[0][1], kv[0][0])):
        body = r"U^{\infty}_{(%d,%d)}" % (a, m) if latex else f"U^inf_({a},{m})"
        parts.append(_power(body, v, latex))
    torsion = sorted(mod.torsion_counter().items(), key=lambda kv: (kv[0][2], kv[0][1], kv[0][0]))
    for (m, a, o), v in torsion:
        body = "U^{%d}_{(%d,%d)}" % (o, a, m) if latex else f"U^{o}_({a},{m})"
        parts.append(_power(body, v, latex))
    if not parts:
        return "0"
    return (r" \oplus " if latex else " + ").join(parts)


def _power(body: str, v: int, latex: bool) -> str:
    if v == 1:
        return body
    return f"({body})^{{{v}}}" if latex else f"({body})^{v}"


# ---------------------------------------------------------------------------
# subcommands


def cmd_compute(args) -> int:
    d = load_input(args.input)
    trace = validate(d)
    flavor = args.flavor
    if trace.classification == DOUBLY_PERIODIC:
        if flavor == "minus":
            raise DiagramError("the minus flavor is not defined for doubly-periodic diagrams")
        _limit(d, "hat", args)
        tilde = homology_f2(build_complex(d, TILDE, trace))
        dims = tilde if flavor == "tilde" else _periodic_hat(d, trace, tilde)
        if args.json:
            obj = json.loads(result_json(flavor, dims))
            obj["relative"] = True
            print(json.dumps(obj, sort_keys=True))
        else:
            print(fmt_hat(dims) + "  (relative Maslov grading)")
        return EXIT_OK
    _limit(d, "minus" if flavor == "minus" else "hat", args)
    inv = knot_invariants(d, minus=flavor == "minus", trace=trace)
    if flavor == "tilde":
        _emit_dims(args, "tilde", inv.tilde, None)
    elif flavor == "hat":
        _emit_dims(args, "hat", inv.hat, None)
    else:
        if args.json:
            print(result_json("minus", BigradedDims(), inv.minus))
        else:
            print(fmt_module(inv.minus))
    return EXIT_OK


def _periodic_hat(d: Diagram, trace, tilde: BigradedDims) -> BigradedDims:
    # each extra (O, X) pair contributes F^2 in a single bigrading
    k2 = d.n - trace.n_components
    if k2 % 2:
        raise DivisionError("n minus the number of components must be even for a doubly-periodic diagram")
    scale = 2 ** (k2 // 2)
    if any(v % scale for v in tilde.values()):
        raise DivisionError("tilde dimensions are not divisible by the W factor")
    return BigradedDims({key: v // scale for key, v in tilde.items()})


def _emit_dims(args, flavor: str, dims: BigradedDims, mod) -> None:
    if args.json:
        print(result_json(flavor, dims, mod))
    else:
        print(fmt_hat(dims))


def cmd_poly(args) -> int:
    d = load_input(args.input)
    _limit(d, "poly", args)
    p = alexander_polynomial(d)
    print(p.latex() if args.latex else p.format())
    return EXIT_OK


def cmd_invariants(args) -> int:
    d = load_input(args.input)
    trace = validate(d)
    _limit(d, "hat", args)
    with_minus = d.n <= (args.max_size if args.max_size is not None else LIMITS["minus"])
    inv = knot_invariants(d, minus=with_minus, trace=trace)
    prof = delta_profile(inv.hat)
    if args.json:
        obj = {"n": d.n, "alexander": inv.alexander.format(), "tau": inv.tau, "ord_u": inv.order,
               "hat": inv.hat.to_json_obj(),
               "delta_profile": [{"2delta": k, "dim": v} for k, v in prof.items()]}
        if inv.minus is not None:
            obj["module"] = inv.minus.to_json_obj()
        print(json.dumps(obj, sort_keys=True))
        return EXIT_OK
    print(f"alexander: {inv.alexander.format()}")
    print(f"tau: {inv.tau if inv.tau is not None else '-'}")
    print(f"ord_u: {inv.order if inv.order is not None else '-'}")
    print(f"hat: {fmt_hat(inv.hat)}")
    if inv.minus is not None:
        print(f"minus: {fmt_module(inv.minus)}")
    print("delta: " + " ".join(f"{k}:{v}" for k, v in prof.items()))
    return EXIT_OK


def cmd_verify(args) -> int:
    d = load_input(args.input)
    validate(d)
    _limit(d, "hat", args)
    rep = verify_diagram_suite(d, moves=args.moves, seed=args.seed,
                               minus_limit=LIMITS["minus"] if args.max_size is None else args.max_size,
                               subject=args.input)
    print(rep.to_json() if args.json else rep.to_text())
    return EXIT_OK if rep.ok else EXIT_CONSISTENCY


def cmd_table(args) -> int:
    root = Path(args.dir)
    if not root.is_dir():
        raise DiagramError(f"no such directory: {args.dir}")
    rows = []
    for path in sorted(root.glob("*.rgd")):
        d = load_diagram(str(path))
        validate(d)
        _limit(d, "hat", args)
        cap = args.max_size if args.max_size is not None else LIMITS["minus"]
        inv = knot_invariants(d, minus=d.n <= cap)
        rows.append((d.name or path.stem, d, inv))
    if args.json:
        out = [{"name": name, "n": d.n, "hat": inv.hat.to_json_obj(),
                "module": inv.minus.to_json_obj() if inv.minus is not None else None,
                "alexander": inv.alexander.format(), "tau": inv.tau} for name, d, inv in rows]
        print(json.dumps(out, sort_keys=True))
        return EXIT_OK
    if args.latex:
        print(r"\begin{tabular}{llll}")
        print(r"knot & $\widehat{HFR}$ & $HFR^-$ & $\Delta^R$ \\ \hline")
        for name, d, inv in rows:
            minus = fmt_module(inv.minus, latex=True) if inv.minus is not None else "--"
            print(f"{_tex_name(name)} & ${fmt_hat(inv.hat, latex=True)}$ & ${minus}$ & "
                  f"${inv.alexander.latex()}$ \\\\")
        print(r"\end{tabular}")
        return EXIT_OK
    for name, d, inv in rows:
        minus = fmt_module(inv.minus) if inv.minus is not None else "-"
        print(f"{name}\t{fmt_hat(inv.hat)}\t{minus}\t{inv.alexander.format()}")
    return EXIT_OK


def _tex_name(name: str) -> str:
    return name.replace("_", r"\_")


def cmd_corpus(args) -> int:
    if args.action == "list":
        for name in corpus_names():
            e = corpus_entry(name)
            print(f"{name}\tn={len(e.sigma_o)}\t{e.knot}\t{e.note}")
        return EXIT_OK
    if not args.name:
        raise DiagramError("corpus get needs a name")
    sys.stdout.write(corpus_get(args.name).to_rgd())
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="realgrid", description="Real grid homology of strongly invertible knots")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, json_flag=True):
        p.add_argument("--max-size", type=int, default=None, help="override the size limit")
        if json_flag:
            p.add_argument("--json", action="store_true")

    p = sub.add_parser("compute", help="bigraded homology")
    p.add_argument("input")
    p.add_argument("--flavor", choices=["tilde", "hat", "minus"], default="hat")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("poly", help="real Alexander polynomial")
    p.add_argument("input")
    p.add_argument("--latex", action="store_true")
    common(p, json_flag=False)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("invariants", help="polynomial, tau, torsion order, hat and delta profile")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="consistency battery and random move invariance")
    p.add_argument("input")
    p.add_argument("--moves", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="table over a directory of .rgd files")
    p.add_argument("dir")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--latex", action="store_true")
    g.add_argument("--json", action="store_true")
    p.add_argument("--max-size", type=int, default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("corpus", help="embedded diagrams")
    p.add_argument("action", choices=["list", "get"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_corpus)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        threads()
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (DivisionError, GradingError, PolyDivisionError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (DiagramError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
