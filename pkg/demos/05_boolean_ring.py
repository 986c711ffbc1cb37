"""Codewords as subsets, and when a code is a subring of the power set.

Run: python demos/05_boolean_ring.py
"""
# %%
from bckcodes import BlockCode, code_family, format_subset, is_boolean_subring, is_linear

# %%
# A codeword maps to the set of positions (1-based) where it has a 1.
code = BlockCode(["0000", "0001", "0010", "0011"])
family = code_family(code)
print("Q =", family)
print("subring:", bool(is_boolean_subring(family)))

# %%
# Linear codes are always closed under symmetric difference (XOR), but a
# subring also needs intersections (AND). The even-weight code of length 3
# is linear and still fails.
even = BlockCode(["000", "110", "101", "011"])
verdict = is_boolean_subring(code_family(even))
op, I, J = verdict.witness
print("linear:", bool(is_linear(even)), "| subring:", bool(verdict))
print(f"{format_subset(I)} {op} {format_subset(J)} = {format_subset(I & J)} is missing")
