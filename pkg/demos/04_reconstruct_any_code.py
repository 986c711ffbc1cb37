"""Embedding an arbitrary code in a BCK-algebra and getting it back.

Run: python demos/04_reconstruct_any_code.py
"""
# %%
from bckcodes import (
    BlockCode,
    code_to_bck,
    code_to_matrix,
    display_label,
    is_closed_ideal,
    recover_code,
    verify_bck,
)
from bckcodes.reconstruction import ideal_elements

code = BlockCode(["0000", "0001", "0010", "0011"])

# %%
# The extended matrix: an all-ones first row, then the codewords (sorted
# descending) behind an identity block, then unit rows for each position.
for row in code_to_matrix(code).rows():
    print(row)

# %%
# Read as an order, the matrix has a least element, hence a BCK-algebra.
t, A, B = code_to_bck(code)
print("BCK:", verify_bck(t).is_bck)
print("A =", [display_label(a) for a in A], " B =", [display_label(b) for b in B])

# %%
# Cut functions of the B elements, restricted to A, are the codewords.
print("recovered:", recover_code(t, A, B).strings())

# %%
# Zero together with A is a closed right ideal: every product x*y with x in
# A is either 0 or x.
print("closed right ideal:", bool(is_closed_ideal(t, ideal_elements(len(B), len(A)))))

# %%
# Nothing depends on linearity.
odd = BlockCode(["101", "011", "110", "111"])
t, A, B = code_to_bck(odd)
print("non-linear code recovered:", recover_code(t, A, B).strings())
