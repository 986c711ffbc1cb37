"""Embedding an arbitrary block code in a BCK-algebra and recovering it.

A code with ``m`` words of length ``q`` is placed in an
``(m+q+1) x (m+q+1)`` 0/1 matrix over elements ``e0..e(m+q)``:

* row 0 is all ones (``e0`` is the zero element),
* rows ``1..m`` carry the identity in columns ``1..m`` and the codewords,
  sorted in descending lexicographic order, in columns ``m+1..m+q``,
* rows ``m+1..m+q`` carry only their diagonal 1.

Read as a relation the matrix is a partial order with least element
``e0``; its BCK-algebra holds the code as the cut functions of the
codeword-row elements restricted to the column elements.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .algebra import CayleyTable, is_closed_ideal
from .codes import BlockCode, Codeword, lex_sort
from .poset import NotAPartialOrder, Poset, order_violation, poset_to_bck


def display_label(i: int) -> str:
    """Display label: ``θ`` for element 0, ``w{i+1}`` otherwise."""
    return "θ" if i == 0 else f"w{i + 1}"


def parse_label(s: str) -> int:
    """Inverse of :func:`display_label`; plain integers are taken as indices."""
    s = s.strip()
    if s in ("θ", "theta"):
        return 0
    if s[:1] == "w" and s[1:].isdigit() and int(s[1:]) >= 2:
        return int(s[1:]) - 1
    if s.isdigit():
        return int(s)
    raise ValueError(f"unrecognised element label {s!r}")


@dataclass(frozen=True)
class ExtendedMatrix:
    m: int
    q: int
    cells: np.ndarray

    @property
    def size(self) -> int:
        return self.m + self.q + 1

    @property
    def code_block(self) -> np.ndarray:
        """Rows ``1..m`` by columns ``m+1..m+q``: the sorted input code."""
        return self.cells[1 : self.m + 1, self.m + 1 :]

    def rows(self) -> list[str]:
        return ["".join(map(str, row)) for row in self.cells.tolist()]

    def layout_violation(self) -> str | None:
        m, q, M = self.m, self.q, self.cells
        if M.shape != (self.size, self.size):
            return f"shape {M.shape} is not {(self.size, self.size)}"
        if not (M[0] == 1).all():
            return "row 0 is not all ones"
        if (M[1:, 0] != 0).any():
            return "column 0 has a 1 below row 0"
        if not (M[1 : m + 1, 1 : m + 1] == np.eye(m, dtype=M.dtype)).all():
            return "codeword rows do not carry the identity block"
        if (M[m + 1 :, 1 : m + 1] != 0).any() or not (
            M[m + 1 :, m + 1 :] == np.eye(q, dtype=M.dtype)
        ).all():
            return "column-element rows are not unit rows"
        return None


def code_to_matrix(c: BlockCode) -> ExtendedMatrix:
    c.require_distinct()
    m, q = len(c), c.length
    if m < 1 or q < 1:
        raise ValueError("code needs at least one codeword of positive length")
    words = lex_sort(c, descending=True)
    size = m + q + 1
    cells = np.zeros((size, size), dtype=np.uint8)
    cells[0] = 1
    cells[1 : m + 1, 1 : m + 1] = np.eye(m, dtype=np.uint8)
    cells[1 : m + 1, m + 1 :] = [w.bits for w in words]
    cells[m + 1 :, m + 1 :] = np.eye(q, dtype=np.uint8)
    cells.setflags(write=False)
    return ExtendedMatrix(m, q, cells)


def matrix_to_poset(em: ExtendedMatrix) -> Poset:
    problem = em.layout_violation()
    if problem is not None:
        raise ValueError(f"matrix does not follow the extended layout: {problem}")
    rel = em.cells.astype(bool)
    violation = order_violation(rel)
    if violation is not None:
        raise NotAPartialOrder(*violation)
    return Poset(rel, [display_label(i) for i in range(em.size)])


class Reconstruction(NamedTuple):
    table: CayleyTable
    A: tuple[int, ...]
    B: tuple[int, ...]


def code_to_bck(c: BlockCode) -> Reconstruction:
    """BCK-algebra holding ``c``, with column elements ``A``, row elements ``B``."""
    em = code_to_matrix(c)
    table = poset_to_bck(matrix_to_poset(em))
    m, q = em.m, em.q
    return Reconstruction(table, tuple(range(m + 1, m + q + 1)), tuple(range(1, m + 1)))


def recover_code(t: CayleyTable, A: Iterable[int], B: Iterable[int]) -> BlockCode:
    """For each ``r`` in B, the word over ``x`` in A with bit 1 iff ``r * x = 0``.

    Both sets are traversed in increasing element order.
    """
    A, B = sorted(set(A)), sorted(set(B))
    for x in A + B:
        if not 0 <= x < t.n:
            raise IndexError(f"element {x} out of range for algebra of size {t.n}")
    cut = t.table[np.ix_(np.array(B, dtype=np.intp), np.array(A, dtype=np.intp))] == 0
    return BlockCode((Codeword(row) for row in cut), length=len(A))


def ideal_elements(m: int, q: int) -> list[int]:
    return [0, *range(m + 1, m + q + 1)]


def verify_closed_right_ideal(t: CayleyTable, m: int, q: int) -> bool:
    """Zero plus the ``q`` column elements form a closed right ideal."""
    if t.n != m + q + 1:
        raise ValueError(f"algebra of size {t.n} does not match m={m}, q={q}")
    return bool(is_closed_ideal(t, ideal_elements(m, q)))
