"""Decomposing products in positive characteristic.

Walking up the Bruhat order, each element's product object is split by the
primitive idempotents of its degree-0 endomorphism algebra; peeling off the
summands already seen leaves the new basis element.  Over F_2 the affine A1
group shows the first genuinely modular phenomenon at length 3.
"""

from affkl import build_root_datum
from affkl.hecke import canonical_basis
from affkl.soergel import PCanTable, p_canonical, p_kl
from affkl.weyl import element_from_word, enumerate_elements

d = build_root_datum("GL2")

for p in (0, 2, 3):
    table = PCanTable(d, p, source="soergel" if p else "kl")
    w = element_from_word(d, (1, 0, 1))    # s0 s1 s0 (affine-finite-affine)
    pb = p_canonical(w, table)
    b = canonical_basis(w)
    tag = "== canonical" if pb == b else "!= canonical  <-- torsion"
    print(f"p={p}:  basis element at {w.canonical_str()} {tag}")
    if pb != b:
        print("   expansion:", pb)
        print("   canonical:", b)

print("\ncoefficients at p=2 through length 4:")
table = PCanTable(d, 2)
for w in enumerate_elements(d, 4):
    row = {y.canonical_str(): str(p_kl(y, w, table))
           for y in enumerate_elements(d, 4)
           if p_kl(y, w, table)}
    print(f"  {w.canonical_str()}: {row}")
