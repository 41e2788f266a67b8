"""The Hecke algebra and its canonical basis.

Conventions: (H_s - v^{-1})(H_s + v) = 0, b_s = H_s + v, so coefficients of
the canonical basis are polynomials in v with nonnegative coefficients and
evaluation at v = 1 gives multiplicities directly.
"""

from affkl import build_root_datum
from affkl.hecke import bar, canonical_basis, kl_poly, mult, pairing, unit
from affkl.weyl import element_from_word, enumerate_elements, wid

d = build_root_datum("A2-sc")
s, t = element_from_word(d, (0,)), element_from_word(d, (1,))

bs = canonical_basis(s)
print("b_s =", bs)
print("b_s * b_s =", mult(bs, bs))

w0 = element_from_word(d, (0, 1, 0))
print("\nb_{w0} =", canonical_basis(w0))
print("h_{e, w0} =", kl_poly(wid(d), w0))
print("bar-invariant:", bar(canonical_basis(w0)) == canonical_basis(w0))

print("\npairing(b_s, b_s) =", pairing(bs, bs))
print("pairing(H_e, b_s) =", pairing(unit(d), bs))

print("\naffine A2, canonical basis at length 3:")
for w in enumerate_elements(d, 3):
    if w.length == 3:
        print(" ", w.canonical_str(), "->", canonical_basis(w))
        break
