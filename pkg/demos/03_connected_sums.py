"""Equivariant connected sums.  Hat groups are not multiplicative: 3_1 and 4_1
each have total dimension 3, yet the sum has 7, not 9.  Size-11 minus
computations take a few seconds each.
"""

from realgrid.corpus import corpus_get
from realgrid.invariants import knot_invariants

for name in ("trefoil7", "fig8", "5_2"):
    print(f"{name:12s} hat total {knot_invariants(corpus_get(name), minus=False).hat.total}")

for name in ("sum_3_1_4_1", "sum_3_1_5_1", "sum_3_1_5_2"):
    k = knot_invariants(corpus_get(name))
    print(name, corpus_get(name).meta["knot"], "size", k.n)
    print("  hat  ", k.hat.items_sorted(), "total", k.hat.total)
    print("  minus towers", k.minus.towers, "torsion (m, a2, order, mult)", k.minus.torsion)
    print("  tau^R", k.tau, "ord_u", k.order)
