"""Twist knots T_n with both involution families; the polynomial follows
-k t^-1 + 1 + k t (n = 2k or 2k - 1) for one family and depends on n mod 4 for
the other.  Entries marked mirror=yes are diagrams of the mirror knot."""

from realgrid.corpus import corpus_entry, corpus_get, corpus_names
from realgrid.invariants import alexander_polynomial

for name in corpus_names():
    if name.startswith("twist_"):
        e = corpus_entry(name)
        d = corpus_get(name)
        print(f"{name:12s} {e.knot:4s} size {d.n:2d}  {alexander_polynomial(d).format():20s} {e.note}")
