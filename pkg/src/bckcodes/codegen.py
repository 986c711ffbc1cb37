"""Codes read off a BCK-algebra through a BCK-function and its cut functions."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .algebra import CayleyTable, verify_bck
from .codes import BlockCode, Codeword, _same_length


@dataclass(frozen=True)
class BCKFunction:
    """Map from positions ``0..n-1`` into the elements of an algebra."""

    values: tuple[int, ...]

    def __init__(self, values: Sequence[int]):
        object.__setattr__(self, "values", tuple(int(v) for v in values))

    @classmethod
    def identity(cls, n: int) -> BCKFunction:
        return cls(range(n))

    def __len__(self) -> int:
        return len(self.values)


def _require_bck(t: CayleyTable) -> None:
    report = verify_bck(t)
    if not report.is_bck:
        failed = ", ".join(f"{a} at {v.witness}" for a, v in report.failures().items())
        raise ValueError(f"table is not a BCK-algebra ({failed})")


def _require_range(t: CayleyTable, f: BCKFunction) -> None:
    bad = [v for v in f.values if not 0 <= v < t.n]
    if bad:
        raise ValueError(f"BCK-function values {bad} outside 0..{t.n - 1}")


def _cut_rows(t: CayleyTable, f: BCKFunction) -> np.ndarray:
    return t.table[:, list(f.values)] == 0


def cut_function(t: CayleyTable, f: BCKFunction, q: int) -> Codeword:
    """Bit ``i`` is 1 iff ``q * f(i) = 0``."""
    if not 0 <= q < t.n:
        raise IndexError(f"element {q} out of range")
    _require_range(t, f)
    _require_bck(t)
    return Codeword(_cut_rows(t, f)[q])


def generate_code(t: CayleyTable, f: BCKFunction | None = None) -> BlockCode:
    """One codeword per algebra element, zero element first.

    ``f`` defaults to the identity on the carrier. Duplicate codewords
    (from a non-injective ``f``) are kept.
    """
    if f is None:
        f = BCKFunction.identity(t.n)
    _require_range(t, f)
    _require_bck(t)
    return BlockCode((Codeword(row) for row in _cut_rows(t, f)), length=len(f))


def leq_c(u: Codeword, v: Codeword) -> bool:
    """``u <=_c v`` iff every bit of ``v`` is at most the matching bit of ``u``.

    The order is reversed relative to bitwise inclusion: the all-ones word
    is the bottom.
    """
    _same_length(u, v)
    return all(b <= a for a, b in zip(u.bits, v.bits))
