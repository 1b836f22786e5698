"""Group candidate diagrams by their computed hat and minus groups.

usage: certify.py CACHE.jsonl KNOT [POLY] [--limit N] [--swap]
"""

import argparse
import json
import sys
from collections import defaultdict

sys.path.insert(0, "/root/pkg/src")

from realgrid.complexes import MINUS, TILDE, build_complex
from realgrid.diagram import Diagram, swap_markers, validate
from realgrid.homology import divide_w, homology_f2, homology_over_u
from realgrid.invariants import alexander_polynomial, tau_r
from realgrid.states import shift_constant


def compute(d):
    tr = validate(d)
    k = shift_constant(d.n, tr)
    hat = divide_w(homology_f2(build_complex(d, TILDE, tr)), k)
    mod = divide_w(homology_over_u(build_complex(d, MINUS, tr)), k)
    return tr, hat, mod


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("cache")
    ap.add_argument("knot")
    ap.add_argument("poly", nargs="?")
    ap.add_argument("--limit", type=int, default=40)
    ap.add_argument("--swap", action="store_true")
    a = ap.parse_args()
    groups = defaultdict(list)
    seen = 0
    for line in open(a.cache):
        rec = json.loads(line)
        if rec["knot"].split("(")[0] != a.knot or (a.poly and rec["poly"] != a.poly):
            continue
        d = Diagram(len(rec["O"]), tuple(rec["O"]), tuple(rec["X"]))
        if a.swap:
            d = swap_markers(d)
        tr, hat, mod = compute(d)
        key = (str(alexander_polynomial(d, tr)), tuple(sorted(hat.items())),
               tuple(mod.towers), tuple(mod.torsion))
        groups[key].append((list(d.sigma_o), list(d.sigma_x)))
        seen += 1
        if seen >= a.limit:
            break
    for (poly, hat, tw, ts), ds in sorted(groups.items(), key=lambda kv: -len(kv[1])):
        print(f"{len(ds):4d}  D={poly}  hat={list(hat)}  towers={list(tw)} torsion={list(ts)}")
        print(f"      e.g. O={ds[0][0]} X={ds[0][1]}")


if __name__ == "__main__":
    main()
