"""The extended affine Weyl group: lengths, words, sectors, cosets.

Elements are pairs w * t(lambda).  The length comes from the root-wise
formula; on the affine subgroup it agrees with reduced-word length, and the
length-zero elements form the subgroup that permutes the affine diagram.
"""

from affkl import build_root_datum
from affkl.weyl import (
    bruhat_leq,
    enumerate_elements,
    finitary_data,
    min_double_coset_reps,
    omega_factorize,
    reduced_word,
    simple_reflections,
    translation,
)

d = build_root_datum("GL2")
refls = simple_reflections(d)
print("simple reflections:", [(s.index, s.kind) for s in refls])
for s in refls:
    if s.kind == "affine":
        sp, w = s.conj_data
        print(f"  affine s{s.index} = t(beta) s_beta with beta={s.beta}; "
              f"witness: conjugate of s{sp.index} by {w.canonical_str()}")

t = translation(d, (1, 0))
print("\nlength of t((1,0)) =", t.length)
om, u = omega_factorize(t)
print("omega part:", om.canonical_str(), " affine part:", u.canonical_str())

t_alpha = translation(d, (1, -1))
print("reduced word of t(alpha):",
      [f"s{i}" for i in reduced_word(t_alpha)])

print("\nelements of length <= 3 in the affine subgroup:")
for x in enumerate_elements(d, 3):
    print(f"  l={x.length}  {x.canonical_str()}")

sa = refls[0]
print("\nBruhat: s_alpha <= t(alpha):",
      bruhat_leq(sa.as_element, t_alpha))

elems, longest = finitary_data([sa])
print("W_K for K={s0}:", [x.canonical_str() for x in elems],
      " longest:", longest.canonical_str())
print("minimal (empty, K) coset representatives up to length 3:",
      [r.canonical_str() for r in min_double_coset_reps([], [sa], 3, datum=d)])
