"""Two involution directions on 8_20 and 9_42 give different hat groups with
the same real Alexander polynomial; exchanging O and X maps one to the other.
"""

from realgrid.corpus import corpus_get
from realgrid.diagram import swap_markers
from realgrid.invariants import knot_invariants, swap_regrade

for name in ("8_19", "8_20a", "8_20b", "9_42a", "9_42b", "9_42c"):
    k = knot_invariants(corpus_get(name), minus=False)
    print(f"{name:6s} {k.alexander.format():22s} {k.hat.items_sorted()}")

a = knot_invariants(corpus_get("9_42a"), minus=False)
b = knot_invariants(swap_markers(corpus_get("9_42a")), minus=False)
# O <-> X regrades (m, a2) -> (m - a2, -a2)
print("swap regrading predicted:", b.hat == swap_regrade(a.hat))
print("swapped 9_42a equals 9_42b:", b.hat == knot_invariants(corpus_get("9_42b"), minus=False).hat)
