"""Search local rewrites of a real knot diagram for real oriented skein triples.

At a column pair (c, c+1), L0 swaps the X markers of the two columns and of the
mirrored rows; the partner diagram then swaps the O markers at the same place.
A triple is kept when the real Alexander polynomials satisfy the skein identity.
"""

import json
import sys

sys.path.insert(0, "/root/pkg/src")

from realgrid.diagram import Diagram, DiagramError, validate
from realgrid.invariants import T_MINUS_TINV, alexander_polynomial


def swap_pair(d: Diagram, c: int, which: str) -> Diagram:
    n = d.n
    so, sx = list(d.sigma_o), list(d.sigma_x)
    s = so if which == "O" else sx
    s[c], s[c + 1] = s[c + 1], s[c]
    r0, r1 = n - 2 - c, n - 1 - c
    s[:] = [r1 if v == r0 else r0 if v == r1 else v for v in s]
    return Diagram(n, tuple(so), tuple(sx))


def triples(d: Diagram):
    dk = alexander_polynomial(d)
    for c in range(d.n - 1):
        try:
            d0 = swap_pair(d, c, "X")
            d1 = swap_pair(d0, c, "O")
            t0, t1 = validate(d0), validate(d1)
            p0 = alexander_polynomial(d0, t0)
            p1 = alexander_polynomial(d1, t1)
        except (DiagramError, ArithmeticError):
            continue
        for sign in (1, -1):
            plus, minus = (d, d1) if sign == 1 else (d1, d)
            pp, pm = (dk, p1) if sign == 1 else (p1, dk)
            if pp - pm == T_MINUS_TINV * p0 and p0:
                yield c, plus, minus, d0, pp, pm, p0, t0


if __name__ == "__main__":
    O = [int(v) for v in sys.argv[1].split(",")]
    X = [int(v) for v in sys.argv[2].split(",")]
    d = Diagram(len(O), tuple(O), tuple(X))
    for c, plus, minus, zero, pp, pm, p0, t0 in triples(d):
        print(json.dumps({"c": c, "plus": [plus.sigma_o, plus.sigma_x], "minus": [minus.sigma_o, minus.sigma_x],
                          "zero": [zero.sigma_o, zero.sigma_x], "D+": str(pp), "D-": str(pm), "D0": str(p0),
                          "l_p0": t0.l_p, "comps0": len(t0.components)}))
