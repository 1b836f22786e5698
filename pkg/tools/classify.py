"""Identify candidate diagrams (JSON lines from search.py) and compute their
real Alexander polynomials.  Corpus-build tool."""

from __future__ import annotations

import json
import sys
import warnings

warnings.filterwarnings("ignore")
sys.path.insert(0, __file__.rsplit("/", 2)[0] + "/src")

from realgrid.diagram import Diagram, validate  # noqa: E402
from realgrid.invariants import alexander_polynomial  # noqa: E402
from gridknot import identify  # noqa: E402


def main():
    cache = open(sys.argv[1], "w") if len(sys.argv) > 1 else None
    seen = {}
    for line in sys.stdin:
        rec = json.loads(line)
        d = Diagram(len(rec["O"]), rec["O"], rec["X"])
        tr = validate(d)
        if tr.classification != "strongly-invertible":
            continue
        poly = str(alexander_polynomial(d, tr))
        ids = identify(rec["O"], rec["X"])
        name = next((s for s in ids if s[0].isdigit() and "_" in s), ids[0] if ids else "?")
        key = (rec["det"], name, poly)
        seen.setdefault(key, []).append((rec["O"], rec["X"]))
        if cache is not None:
            cache.write(json.dumps({**rec, "knot": name, "poly": poly}) + "\n")
    for (det, name, poly), lst in sorted(seen.items()):
        print(f"det={det} {name:>8} count={len(lst):4d}  DR={poly}  eg O={lst[0][0]} X={lst[0][1]}")


if __name__ == "__main__":
    main()
