"""Mirror trefoil, size 5: states, domains, complexes, homology, invariants.

Run: python demos/01_trefoil_pipeline.py
"""

from realgrid.complexes import MINUS, build_complex, check_d_squared, tilde_part
from realgrid.corpus import corpus_get
from realgrid.diagram import validate
from realgrid.domains import domain_stats
from realgrid.homology import divide_w, hat_from_minus, homology_both
from realgrid.invariants import alexander_polynomial, tau_r, torsion_order
from realgrid.states import count_states, shift_constant

d = corpus_get("trefoil5")
print(d.to_rgd())

trace = validate(d)
print("classification:", trace.classification, " l_f =", trace.l_f, " l_p =", trace.l_p)

# real states are the involutions of five letters
print("real states:", count_states(d.n))

# empty real rectangles avoiding every X, by shape
st = domain_stats(d)
print("domains:", st.total, st.per_kind)

full = build_complex(d, MINUS, trace)
print("d^2 = 0:", check_d_squared(full), check_d_squared(tilde_part(full)))

tilde, raw = homology_both(full)
k = shift_constant(d.n, trace)
print(f"tilde total {tilde.total} = hat total * 2^{k}")

hat = divide_w(tilde, k)
mod = divide_w(raw, k)
print("hat   (m, a2):", hat.items_sorted())
print("minus towers:", mod.towers, " torsion (m, a2, order, mult):", mod.torsion)
print("hat from minus agrees:", hat_from_minus(mod) == hat)
print("tau^R =", tau_r(mod), " ord_u =", torsion_order(mod))
print("Delta^R =", alexander_polynomial(d).format())
