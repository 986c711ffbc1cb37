"""Codewords as subsets of ``{1..n}`` inside the power-set Boolean ring.

XOR of codewords corresponds to symmetric difference and bitwise AND to
intersection. A family is a subring when it contains the empty set and is
closed under both operations.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations_with_replacement

from ._verdict import PASS, Verdict, fail
from .codes import BlockCode, Codeword


def codeword_to_subset(c: Codeword) -> frozenset[int]:
    """1-based positions holding a 1."""
    return frozenset(i + 1 for i, b in enumerate(c.bits) if b)


def subset_to_codeword(subset: Iterable[int], n: int) -> Codeword:
    subset = set(subset)
    outside = sorted(i for i in subset if not 1 <= i <= n)
    if outside:
        raise ValueError(f"elements {outside} not in 1..{n}")
    return Codeword(int(i in subset) for i in range(1, n + 1))


@dataclass(frozen=True)
class SubsetFamily:
    n: int
    members: tuple[frozenset[int], ...]

    def __init__(self, n: int, members: Iterable[Iterable[int]]):
        members = tuple(frozenset(s) for s in members)
        for s in members:
            if any(not 1 <= i <= n for i in s):
                raise ValueError(f"{format_subset(s)} is not a subset of 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(format_subset(s) for s in self.members) + "}"


def format_subset(s: Iterable[int]) -> str:
    s = sorted(s)
    return "∅" if not s else "{" + ",".join(map(str, s)) + "}"


def code_family(c: BlockCode) -> SubsetFamily:
    return SubsetFamily(c.length, [codeword_to_subset(w) for w in c])


def is_boolean_subring(f: SubsetFamily) -> Verdict:
    """Empty set present, closed under symmetric difference and intersection.

    On failure the witness is ``(op, I, J)`` with ``op`` in
    ``{"Δ", "∩"}`` and ``I op J`` missing from the family.
    """
    members = set(f.members)
    if frozenset() not in members:
        return fail(("∅",), "empty set missing")
    for I, J in combinations_with_replacement(f.members, 2):
        if I ^ J not in members:
            return fail(("Δ", I, J), "not closed under symmetric difference")
    for I, J in combinations_with_replacement(f.members, 2):
        if I & J not in members:
            return fail(("∩", I, J), "not closed under intersection")
    return PASS
