"""Small named structures used throughout the tests and demos."""
from __future__ import annotations

from .algebra import CayleyTable
from .codes import BlockCode
from .poset import Poset


def _bits(rows: str) -> list[list[int]]:
    return [[int(ch) for ch in row] for row in rows.split()]


# five-element BCK-algebra whose order is 0 < 1 < {2, 3} < 4
BCK5_CHAIN_DIAMOND = CayleyTable(
    [
        [0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0],
        [2, 1, 0, 1, 0],
        [3, 3, 3, 0, 0],
        [4, 4, 4, 4, 0],
    ]
)

# five-element BCK-algebra whose order is two chains 1 < 3 and 2 < 4 over 0
BCK5_TWO_CHAINS = CayleyTable(
    [
        [0, 0, 0, 0, 0],
        [1, 0, 1, 0, 1],
        [2, 2, 0, 2, 0],
        [3, 1, 3, 0, 3],
        [4, 4, 2, 4, 0],
    ]
)

CHAIN_DIAMOND_POSET = Poset(_bits("11111 01111 00101 00011 00001"))
TWO_CHAINS_POSET = Poset(_bits("11111 01010 00101 00010 00001"))
# read row by row as q <= b: A is the top, C and D are minimal
FOUR_ELEMENT_POSET = Poset(_bits("1000 1100 1110 1101"), labels=["A", "B", "C", "D"])

CHAIN_DIAMOND_CODE = BlockCode(["11111", "01111", "00101", "00011", "00001"])
TWO_CHAINS_CODE = BlockCode(["11111", "01010", "00101", "00010", "00001"])
FOUR_ELEMENT_CODE = BlockCode(["1000", "1100", "1110", "1101"])

# two-dimensional linear code of length 4 and its XOR group, labelled θ, A, B, C
LINEAR_CODE_4 = BlockCode(["0000", "0001", "0010", "0011"])
KLEIN_GROUP = CayleyTable(
    [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ]
)

# extended matrix of LINEAR_CODE_4, elements θ, w2..w9
LINEAR_CODE_4_MATRIX = _bits(
    """
    111111111
    010000011
    001000010
    000100001
    000010000
    000001000
    000000100
    000000010
    000000001
    """
)

# BCK-algebra reconstructed from LINEAR_CODE_4, written with display labels
_W = {"θ": 0, **{f"w{k}": k - 1 for k in range(2, 10)}}
_RECONSTRUCTED_ROWS = """
    θ  θ  θ  θ  θ  θ  θ  θ  θ
    w2 θ  w2 w2 w2 w2 w2 θ  θ
    w3 w3 θ  w3 w3 w3 w3 θ  w3
    w4 w4 w4 θ  w4 w4 w4 w4 θ
    w5 w5 w5 w5 θ  w5 w5 w5 w5
    w6 w6 w6 w6 w6 θ  w6 w6 w6
    w7 w7 w7 w7 w7 w7 θ  w7 w7
    w8 w8 w8 w8 w8 w8 w8 θ  w8
    w9 w9 w9 w9 w9 w9 w9 w9 θ
"""
LINEAR_CODE_4_ALGEBRA = CayleyTable(
    [[_W[tok] for tok in line.split()] for line in _RECONSTRUCTED_ROWS.strip().splitlines()]
)

# linear, but its support sets are not closed under intersection
EVEN_WEIGHT_CODE_3 = BlockCode(["000", "110", "101", "011"])
