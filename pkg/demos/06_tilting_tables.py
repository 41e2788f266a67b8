"""Multiplicity tables: Iwahori and parahoric.

Evaluating basis coefficients at v = 1 gives standard-object multiplicities
in indecomposable tilting objects; the parahoric variant is an alternating
sum over the right parabolic subgroup and does not depend on the left-coset
representative chosen.
"""

from affkl import build_root_datum
from affkl.soergel import PCanTable
from affkl.tilt import mult_table, tilt_hom_dim
from affkl.weyl import enumerate_elements, simple_reflections

d = build_root_datum("GL2")
table = PCanTable(d, 2, source="soergel")

print("Iwahori multiplicities at p = 2 through length 4")
print("(note the entries equal to 2 caused by the length-3 torsion):\n")
print(mult_table([], [], 4, table).render("text"))

sa, s0 = simple_reflections(d, conj_search=False)
print("parahoric table for K = {s0}:\n")
print(mult_table([], [sa], 4, table).render("text"))

print("Hom dimensions between tilting objects (length <= 2):")
for w in enumerate_elements(d, 2):
    row = [tilt_hom_dim(w, y, table) for y in enumerate_elements(d, 2)]
    print(f"  {w.canonical_str()}: {row}")

a2 = build_root_datum("A2-sc")
klt = PCanTable(a2, 0, source="kl")
refls = simple_reflections(a2, conj_search=False)
L, K = [refls[0]], [refls[1], refls[2]]
print("\naffine A2, L = {s0}, K = {s1, s2}, characteristic 0:\n")
print(mult_table(L, K, 5, klt).render("text"))
