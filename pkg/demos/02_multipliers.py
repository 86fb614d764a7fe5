"""
Polynilpotent multipliers
=========================

The multiplier of Z^m + Z_{n_1} + ... + Z_{n_k} with respect to the class
row (c_1, ..., c_t) only depends on the exponents f_i, obtained by
feeding i through the Witt numbers witt(c_1 + 1, .), ..., witt(c_t + 1, .).
"""

from polynil import FGAbelianGroup, chi_chain, multiplier_order, polynilpotent_multiplier, witt

print("witt(w, d), rows w = 1..5, columns d = 0..6")
for w in range(1, 6):
    print(w, [witt(w, d) for d in range(7)])

rows = [(1,), (2,), (1, 1), (1, 2), (2, 1)]
print("\nf_i for i = 0..6")
for row in rows:
    print(row, [chi_chain(row, i) for i in range(7)])

# Row (1) is the ordinary Schur multiplier: Z_{n_2} + Z_{n_3}^2 + ...
g = FGAbelianGroup(0, (12, 6, 2))
for row in rows:
    s = polynilpotent_multiplier(g, row)
    print(f"{row}: {s}   |M| factored = {multiplier_order(s)}")

# With t >= 2 and c_1 = 1 every group on at most two generators has trivial multiplier
for n in (2, 3, 4):
    print(f"Z{n} + Z{n} under (1,1):", polynilpotent_multiplier(FGAbelianGroup(0, (n, n)), (1, 1)))
print("Z^3 under (1,):", polynilpotent_multiplier(FGAbelianGroup(3), (1,)))
