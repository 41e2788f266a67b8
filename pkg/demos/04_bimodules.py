"""Labeled bimodules: generators, products, and the graded Hom formula.

The category is built from one rank-2 object per simple reflection.  Each
object carries a decomposition of its generic fiber labeled by group
elements; morphisms must preserve those labels, and the graded dimensions of
reduced Hom spaces reproduce the standard-basis pairing of characters.
"""

from affkl import build_root_datum
from affkl.bimodule import b_object, bott_samelson, character, f_object, tensor
from affkl.hecke import pairing
from affkl.homs import graded_hom_dims, hom_space
from affkl.realization import build_realization
from affkl.weyl import simple_reflections, translation, wid

d = build_root_datum("GL2")
real = build_realization(d, 0)
sa, s0 = simple_reflections(d, conj_search=False)

B = b_object(real, sa)
print("B_s: degrees", B.degrees, " labels",
      [(w.canonical_str(), len(v)) for w, v in B.labels])
print("character:", character(B))

M = bott_samelson(real, wid(d), [sa, s0], 0)
print("\nBS(s0, s1): degrees", sorted(M.degrees))
print("character:", character(M))

print("\ndim Hom^0(B,B) =", len(hom_space(B, B, 0)))
print("graded reduced Hom dims (B, B):", graded_hom_dims(B, B))
print("character pairing:           ", pairing(character(B), character(B)))

# conjugating by a length-zero element permutes the generators
om = translation(d, (1, 0))
from affkl.weyl import omega_factorize

om = omega_factorize(om)[0]
conj = tensor(tensor(f_object(real, om), B), f_object(real, om.inverse()))
print("\nlabels of F_omega * B_s * F_omega^{-1}:",
      [w.canonical_str() for w, _ in conj.labels])
print("(the nontrivial label is the other simple reflection)")
