"""The XOR group on a linear binary code, as a Cayley table."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._verdict import PASS, Verdict, fail
from .algebra import CayleyTable
from .codes import BlockCode, is_linear, lex_sort


def xor_group(c: BlockCode) -> CayleyTable:
    """Group table of ``c`` under bitwise XOR.

    Elements are the codewords in ascending lexicographic order, so the zero
    word is element 0. Labels are the codeword strings.
    """
    c.require_distinct()
    linear = is_linear(c)
    if not linear:
        raise ValueError(f"code is not linear: {linear.reason} {tuple(map(str, linear.witness))}")
    words = lex_sort(c).words
    index = {w: i for i, w in enumerate(words)}
    table = [[index[u ^ v] for v in words] for u in words]
    return CayleyTable(table, labels=[str(w) for w in words])


@dataclass(frozen=True)
class GroupReport:
    results: dict[str, Verdict] = field(default_factory=dict)

    @property
    def is_abelian_group(self) -> bool:
        return all(v.ok for v in self.results.values())

    def __bool__(self) -> bool:
        return self.is_abelian_group


def certify_group(t: CayleyTable) -> GroupReport:
    """Exhaustively check that ``t`` is an abelian group with identity 0.

    Associativity is checked over all n**3 triples.
    """
    T = t.table
    n = t.n
    ix = np.arange(n)

    def verdict(mask, reason):
        hits = np.argwhere(mask)
        return PASS if not hits.size else fail(tuple(int(v) for v in hits[0]), reason)

    # (x*y)*z vs x*(y*z), indexed [x, y, z]
    left = T[T[:, :, None], ix[None, None, :]]
    right = T[ix[:, None, None], T[None, :, :]]
    results = {
        "associative": verdict(left != right, "(x*y)*z != x*(y*z)"),
        "commutative": verdict(T != T.T, "x*y != y*x"),
        "identity": verdict((T[0] != ix) | (T[:, 0] != ix), "0 is not a two-sided identity"),
    }
    has_inverse = (T == 0).any(axis=1)
    results["inverses"] = verdict(~has_inverse, "x has no inverse")
    results["self_inverse"] = verdict(T.diagonal() != 0, "x*x != 0")
    return GroupReport(results)
