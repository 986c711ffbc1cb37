"""Reading binary block codes off a BCK-algebra.

Run: python demos/01_codes_from_algebras.py
"""
# %%
# A BCK-algebra is a Cayley table over 0..n-1 with 0 as the constant.
# verify_bck checks every axiom over every tuple and keeps a witness for
# anything that fails.
from bckcodes import (
    BCKFunction,
    derived_order,
    generate_code,
    hasse_edges,
    is_commutative,
    leq_c,
    min_distance,
    verify_bck,
)
from bckcodes.catalog import BCK5_CHAIN_DIAMOND, BCK5_TWO_CHAINS

report = verify_bck(BCK5_CHAIN_DIAMOND)
for axiom, verdict in report.results.items():
    print(axiom, "pass" if verdict else f"fail at {verdict.witness}")
print("BCK-algebra:", report.is_bck)

# %%
# x <= y iff x*y = 0. The order of this algebra is 0 < 1 < {2, 3} < 4.
order = derived_order(BCK5_CHAIN_DIAMOND)
print("covering pairs:", hasse_edges(order))

# %%
# Pick a BCK-function (here the identity on the carrier). Each element q
# gives one codeword: bit i is 1 exactly when q * f(i) = 0.
code = generate_code(BCK5_CHAIN_DIAMOND, BCKFunction.identity(5))
print("code:", code.strings())
print("code of the second algebra:", generate_code(BCK5_TWO_CHAINS).strings())

# %%
# Both codes are poor error-correcting codes: neighbouring words differ in
# a single position.
print("minimum distances:", min_distance(code), min_distance(generate_code(BCK5_TWO_CHAINS)))

# %%
# The codeword order <=_c mirrors the algebra order element for element.
for x in range(5):
    for y in range(5):
        assert leq_c(code[x], code[y]) == bool(order.leq[x, y])
print("codeword order matches the algebra order")

# %%
# The construction sees only the order, not the rest of the multiplication:
# one algebra is commutative, the other is not, yet both codes are just
# their order matrices.
print("commutative:", bool(is_commutative(BCK5_CHAIN_DIAMOND)), bool(is_commutative(BCK5_TWO_CHAINS)))
