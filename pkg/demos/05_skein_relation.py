"""Skein identity Delta(L+) - Delta(L-) = (t - t^-1) Delta(L0) on a triple of
diagrams that differ only inside columns 2, 3 and the mirrored rows."""

from realgrid.corpus import corpus_entry, corpus_get
from realgrid.invariants import skein_window, verify_skein

names = ("skein_plus", "skein_minus", "skein_zero")
triple = [corpus_get(n) for n in names]
for n, d in zip(names, triple):
    print(f"{n:12s} {corpus_entry(n).note:40s} O={d.sigma_o} X={d.sigma_x}")
print("window column:", skein_window(*triple))
res = verify_skein(*triple)
print(f"({res.plus.format()}) - ({res.minus.format()}) = (t - t^-1)({res.zero.format()})  holds: {res.holds}")
