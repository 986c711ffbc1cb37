"""The group a linear code forms under XOR, seen as a BCI-algebra.

Run: python demos/03_xor_group.py
"""
# %%
from bckcodes import BlockCode, certify_group, is_linear, verify_bck, xor_group

code = BlockCode(["0000", "0001", "0010", "0011"])
print("linear:", bool(is_linear(code)))

# %%
# Elements are the codewords in ascending order, so the zero word is 0.
t = xor_group(code)
names = ["θ", "A", "B", "C"]
for x in range(t.n):
    print(names[x], [names[t.mul(x, y)] for y in range(t.n)])

# %%
report = certify_group(t)
print("abelian group:", report.is_abelian_group)

# %%
# Every XOR group satisfies the four BCI axioms, but not BCK-5 since
# 0 * A = A.
axioms = verify_bck(t)
print("BCI:", axioms.is_bci, "| BCK:", axioms.is_bck, "| BCK-5 witness:", axioms["BCK-5"].witness)
