"""Real grid moves leave every invariant unchanged; transpose keeps the hat
groups and exchanging O and X regrades them."""

import random

from realgrid.corpus import corpus_get
from realgrid.diagram import random_moves, swap_markers, transpose
from realgrid.invariants import knot_invariants, swap_alexander, swap_regrade

d = corpus_get("fig8")
base = knot_invariants(d)
print("fig8:", base.summary())

rng = random.Random(7)
for _ in range(5):
    e, seq = random_moves(d, rng, 3, max_size=11)
    print(f"  size {e.n:2d} after {seq}: unchanged = {knot_invariants(e).summary() == base.summary()}")

tr = knot_invariants(transpose(d), minus=False)
sw = knot_invariants(swap_markers(d), minus=False)
print("transpose keeps hat:", tr.hat == base.hat)
print("swap regrades hat:", sw.hat == swap_regrade(base.hat))
print("swap polynomial p(-1/t):", sw.alexander == swap_alexander(base.alexander), sw.alexander.format())
