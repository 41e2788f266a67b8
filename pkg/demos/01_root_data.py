"""Root data: construction, classification, and the assumption gate.

Every computation in this package starts from a root datum with explicit
root and coroot tables, so non-semisimple examples such as GL2 work the same
way as simply connected ones.
"""

from affkl import build_root_datum, check_assumptions, components, pairing

for name in ("GL2", "A2-sc", "B2-sc", "G2-sc", "A1xA1-sc"):
    d = build_root_datum(name)
    print(f"== {name}:  rank {d.rank}, {len(d.roots)} roots, "
          f"{len(d.positive_roots)} positive")
    for idx, label, beta in components(d):
        print(f"   component {label} on simples {idx}, max short root {beta}")

d = build_root_datum("GL2")
print("\npairing <(1,0), alpha^vee> =", pairing(d, (1, 0), (1, -1)))

print("\nAssumption reports (free quotient, coroot torsion, type bounds):")
for name, p in (("GL2", 2), ("B2-sc", 2), ("B2-sc", 3), ("G2-sc", 5)):
    rep = check_assumptions(build_root_datum(name), p)
    print(f"-- {name} at p={p}: all ok = {rep.all_ok}")
    print("   " + rep.render().replace("\n", "\n   "))
