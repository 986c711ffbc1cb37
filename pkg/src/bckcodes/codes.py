"""Binary codewords, block codes and their Hamming metrics."""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import combinations

import numpy as np

from ._verdict import PASS, Verdict, fail


class Codeword:
    """Immutable fixed-length binary word.

    Accepts a ``"0101"`` string or any iterable of 0/1 values.
    """

    __slots__ = ("bits",)

    def __init__(self, bits):
        if isinstance(bits, str):
            if not bits or set(bits) - {"0", "1"}:
                raise ValueError(f"not a binary word: {bits!r}")
            bits = tuple(int(ch) for ch in bits)
        else:
            bits = tuple(int(b) for b in bits)
            if any(b not in (0, 1) for b in bits):
                raise ValueError(f"bits must be 0 or 1: {bits}")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("Codeword is immutable")

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            return str(self) == other
        if not isinstance(other, Codeword):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __lt__(self, other: Codeword) -> bool:
        return self.bits < other.bits

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __repr__(self) -> str:
        return f"Codeword('{self}')"

    def __xor__(self, other: Codeword) -> Codeword:
        _same_length(self, other)
        return Codeword(a ^ b for a, b in zip(self.bits, other.bits))

    def __and__(self, other: Codeword) -> Codeword:
        _same_length(self, other)
        return Codeword(a & b for a, b in zip(self.bits, other.bits))

    @property
    def weight(self) -> int:
        return sum(self.bits)

    @classmethod
    def zero(cls, length: int) -> Codeword:
        return cls((0,) * length)


def _same_length(u: Codeword, v: Codeword) -> None:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")


class BlockCode:
    """Ordered collection of equal-length codewords.

    Duplicates are kept; operations that need a set reject them.
    """

    def __init__(self, words: Iterable, length: int | None = None):
        words = tuple(w if isinstance(w, Codeword) else Codeword(w) for w in words)
        lengths = {len(w) for w in words}
        if len(lengths) > 1:
            raise ValueError(f"codewords of mixed lengths {sorted(lengths)}")
        if words:
            length = len(words[0]) if length is None else length
            if len(words[0]) != length:
                raise ValueError(f"expected length {length}, got {len(words[0])}")
        self.words = words
        self.length = length if length is not None else 0

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Codeword]:
        return iter(self.words)

    def __getitem__(self, i) -> Codeword:
        return self.words[i]

    def __contains__(self, w) -> bool:
        return Codeword(w) in self.words if isinstance(w, str) else w in self.words

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlockCode):
            return NotImplemented
        return self.words == other.words and self.length == other.length

    def __hash__(self) -> int:
        return hash((self.words, self.length))

    def __repr__(self) -> str:
        return f"BlockCode({[str(w) for w in self.words]})"

    def as_set(self) -> frozenset[str]:
        return frozenset(str(w) for w in self.words)

    def strings(self) -> list[str]:
        return [str(w) for w in self.words]

    def duplicates(self) -> list[Codeword]:
        seen, dups = set(), []
        for w in self.words:
            if w in seen and w not in dups:
                dups.append(w)
            seen.add(w)
        return dups

    def require_distinct(self) -> None:
        dups = self.duplicates()
        if dups:
            raise ValueError(f"duplicate codewords: {[str(w) for w in dups]}")


def hamming_distance(u: Codeword, v: Codeword) -> int:
    _same_length(u, v)
    return sum(a != b for a, b in zip(u.bits, v.bits))


def min_distance_pair(c: BlockCode) -> tuple[int, Codeword, Codeword]:
    """Minimum pairwise distance and the first pair (in code order) attaining it."""
    c.require_distinct()
    if len(c) < 2:
        raise ValueError("minimum distance needs at least two distinct codewords")
    return min(
        ((hamming_distance(u, v), u, v) for u, v in combinations(c.words, 2)),
        key=lambda t: t[0],
    )


def min_distance(c: BlockCode) -> int:
    return min_distance_pair(c)[0]


def is_linear(c: BlockCode) -> Verdict:
    """Zero word present and closed under XOR.

    Witness is ``(u, v)`` with ``u ^ v`` outside the code, or the missing
    zero word.
    """
    words = set(c.words)
    zero = Codeword.zero(c.length)
    if zero not in words:
        return fail((zero,), "zero word missing")
    for u, v in combinations(c.words, 2):
        if u ^ v not in words:
            return fail((u, v), "not closed under XOR")
    return PASS


def lex_sort(c: BlockCode, descending: bool = False) -> BlockCode:
    # sorted() is stable, so equal words keep their input order
    return BlockCode(sorted(c.words, key=lambda w: w.bits, reverse=descending), c.length)


def code_matrix(c: BlockCode) -> np.ndarray:
    if not c.words:
        return np.zeros((0, c.length), dtype=np.uint8)
    return np.array([w.bits for w in c.words], dtype=np.uint8)
