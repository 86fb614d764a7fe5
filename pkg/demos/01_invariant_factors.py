"""
Invariant factors from relation matrices
========================================

Every group in the package is stored as Z^m + Z_{n_1} + ... + Z_{n_k}
with n_{i+1} | n_i. This walk-through shows where those factors come from.
"""

from polynil import FGAbelianGroup, canonicalize, quotient_by_subgroup, smith_normal_form
from polynil.abelian import subgroup_generated

# Smith form of a small relation matrix, with the transforms that witness it
res = smith_normal_form([[4, 0], [0, 2], [2, 1]])
print("diagonal:", res.diagonal)
print("u =", res.u)
print("v =", res.v)

# Z_6 + Z_4 is not yet in chain form; canonicalize merges the prime parts
print(canonicalize(0, [6, 4]))          # Z12 + Z2
print(canonicalize(2, [1, 1]))          # unit factors disappear

# Quotients are cokernels of the stacked relation matrix
g = FGAbelianGroup(0, (4, 2))
for residues in [(2, 0), (2, 1), (1, 0)]:
    x = g.element((), residues)
    print(f"{g} / <{x}> = {quotient_by_subgroup(g, [x])}, "
          f"<{x}> = {subgroup_generated(g, [x])}")

# Infinite groups work too, as long as no enumeration is needed
z2 = FGAbelianGroup(2)
print(z2, "/ <(0, 6)> =", quotient_by_subgroup(z2, [z2.element((0, 6))]))
