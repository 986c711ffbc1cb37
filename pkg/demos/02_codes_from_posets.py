"""Codes from partial orders, and the BCK-algebra a poset with minimum carries.

Run: python demos/02_codes_from_posets.py
"""
# %%
from bckcodes import (
    Poset,
    all_posets,
    generate_code,
    minimum,
    poset_to_bck,
    poset_to_code,
    to_dot,
    verify_bck,
)
from bckcodes.catalog import BCK5_TWO_CHAINS, FOUR_ELEMENT_POSET

# %%
# Posets can be given by their covering pairs; the closure is computed.
p = Poset.from_covers(5, [(0, 1), (0, 2), (1, 3), (2, 4)])
print(to_dot(p))

# %%
# Row q of the code marks every b with q <= b.
print("poset code:", poset_to_code(p).strings())
print("four-element poset:", poset_to_code(FOUR_ELEMENT_POSET).strings())

# %%
# With a least element the poset becomes a BCK-algebra: x*y is 0 when
# x <= y and x otherwise. Its code (identity BCK-function) is the poset code.
t = poset_to_bck(p)
print("table:", t.table.tolist())
print("certified:", verify_bck(t).is_bck)
assert generate_code(t) == poset_to_code(p)

# %%
# BCK5_TWO_CHAINS has the same order but a different multiplication
# (3*1 is 1 there, 3 here). The code cannot tell them apart.
print("same table:", t == BCK5_TWO_CHAINS)
print("same code:", generate_code(t) == generate_code(BCK5_TWO_CHAINS))

# %%
# The same agreement holds for every labeled poset with least element 0
# on up to five points.
checked = 0
for n in range(1, 6):
    for q in all_posets(n):
        if minimum(q) == 0:
            assert generate_code(poset_to_bck(q)) == poset_to_code(q)
            checked += 1
print(f"agreement verified on {checked} posets")
