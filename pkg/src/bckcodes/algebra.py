"""Finite algebras of type (2, 0) stored as Cayley tables.

Elements are the integers ``0..n-1`` and the constant is always element 0.
All checks are exhaustive and vectorised with numpy; witnesses are the
lexicographically smallest failing tuple.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from ._verdict import PASS, Verdict, fail
from .poset import NotAPartialOrder, Poset, order_violation

BCI_AXIOMS = ("BCI-1", "BCI-2", "BCI-3", "BCI-4")
BCK_AXIOMS = BCI_AXIOMS + ("BCK-5",)


class MalformedTableError(ValueError):
    pass


class CayleyTable:
    """Multiplication table ``table[x, y] = x * y`` with zero element 0."""

    zero = 0

    def __init__(self, table, labels: Sequence[str] | None = None):
        arr = np.asarray(table)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise MalformedTableError(f"table must be a non-empty square array, got shape {arr.shape}")
        if not np.issubdtype(arr.dtype, np.integer):
            raise MalformedTableError(f"table entries must be integers, got {arr.dtype}")
        n = arr.shape[0]
        bad = np.argwhere((arr < 0) | (arr >= n))
        if bad.size:
            x, y = (int(v) for v in bad[0])
            raise MalformedTableError(f"entry {x}*{y} = {arr[x, y]} is outside 0..{n - 1}")
        arr = arr.astype(np.intp, copy=True)
        arr.setflags(write=False)
        self.table = arr
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise MalformedTableError("one label per element required")
        self.labels = tuple(labels)

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.n

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def __eq__(self, other) -> bool:
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.table.shape == other.table.shape and bool((self.table == other.table).all())

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"CayleyTable({self.table.tolist()})"

    def relabel(self, perm: Sequence[int]) -> CayleyTable:
        """Isomorphic copy in which old element ``x`` becomes ``perm[x]``."""
        perm = np.asarray(perm, dtype=np.intp)
        if sorted(perm.tolist()) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the elements")
        inv = np.argsort(perm)
        return CayleyTable(perm[self.table[np.ix_(inv, inv)]])


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if hits.size else None


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom results. Every axiom requested is always evaluated."""

    results: dict[str, Verdict] = field(default_factory=dict)

    def __getitem__(self, axiom: str) -> Verdict:
        return self.results[axiom]

    @property
    def is_bci(self) -> bool:
        return all(self.results[a].ok for a in BCI_AXIOMS)

    @property
    def is_bck(self) -> bool:
        return self.is_bci and self.results.get("BCK-5", Verdict(False)).ok

    def failures(self) -> dict[str, Verdict]:
        return {a: v for a, v in self.results.items() if not v.ok}


def _bci_results(t: CayleyTable) -> dict[str, Verdict]:
    T = t.table
    n = t.n
    ix = np.arange(n)
    out = {}

    # ((x*y)*(x*z))*(z*y), indexed [x, y, z]
    xy = T[:, :, None]
    xz = T[:, None, :]
    zy = T.T[None, :, :]
    w = _first(T[T[xy, xz], zy] != 0)
    out["BCI-1"] = PASS if w is None else fail(w, "((x*y)*(x*z))*(z*y) != 0")

    # (x*(x*y))*y, indexed [x, y]
    w = _first(T[T[ix[:, None], T], ix[None, :]] != 0)
    out["BCI-2"] = PASS if w is None else fail(w, "(x*(x*y))*y != 0")

    w = _first(T.diagonal() != 0)
    out["BCI-3"] = PASS if w is None else fail(w, "x*x != 0")

    w = _first((T == 0) & (T.T == 0) & ~np.eye(n, dtype=bool))
    out["BCI-4"] = PASS if w is None else fail(w, "x*y = y*x = 0 with x != y")
    return out


def verify_bci(t: CayleyTable) -> AxiomReport:
    return AxiomReport(_bci_results(t))


def verify_bck(t: CayleyTable) -> AxiomReport:
    results = _bci_results(t)
    w = _first(t.table[0] != 0)
    results["BCK-5"] = PASS if w is None else fail(w, "0*x != 0")
    return AxiomReport(results)


def derived_order(t: CayleyTable) -> Poset:
    """The relation ``x <= y iff x * y = 0``.

    Raises :class:`NotAPartialOrder` (carrying the violated property and a
    witness) when the relation is not a partial order, which can happen for
    tables that are not BCI-algebras.
    """
    rel = t.table == 0
    problem = order_violation(rel)
    if problem is not None:
        raise NotAPartialOrder(*problem)
    return Poset(rel, t.labels)


def is_commutative(t: CayleyTable) -> Verdict:
    """``x*(x*y) == y*(y*x)`` for all pairs."""
    T = t.table
    ix = np.arange(t.n)
    lhs = T[ix[:, None], T]
    rhs = lhs.T
    w = _first(lhs != rhs)
    return PASS if w is None else fail(w, "x*(x*y) != y*(y*x)")


def is_implicative(t: CayleyTable) -> Verdict:
    """``x*(y*x) == x`` for all pairs."""
    T = t.table
    ix = np.arange(t.n)
    lhs = T[ix[:, None], T.T]
    w = _first(lhs != ix[:, None])
    return PASS if w is None else fail(w, "x*(y*x) != x")


@dataclass(frozen=True)
class MorphismCheck:
    ok: bool
    witness: tuple[int, int] | None
    bijective: bool

    def __bool__(self) -> bool:
        return self.ok

    @property
    def is_isomorphism(self) -> bool:
        return self.ok and self.bijective


def check_morphism(tx: CayleyTable, ty: CayleyTable, f: Sequence[int]) -> MorphismCheck:
    """Does ``f(x*y) == f(x) o f(y)`` hold for every pair?"""
    f = np.asarray(f)
    if f.shape != (tx.n,) or not np.issubdtype(f.dtype, np.integer):
        raise ValueError(f"map must give one integer image for each of the {tx.n} elements")
    if ((f < 0) | (f >= ty.n)).any():
        raise ValueError(f"map images must lie in 0..{ty.n - 1}")
    lhs = f[tx.table]
    rhs = ty.table[f[:, None], f[None, :]]
    w = _first(lhs != rhs)
    bijective = tx.n == ty.n and len(set(f.tolist())) == tx.n
    return MorphismCheck(w is None, w, bijective)


def _members(t: CayleyTable, subset: Iterable[int]) -> np.ndarray:
    mask = np.zeros(t.n, dtype=bool)
    for x in subset:
        if not 0 <= x < t.n:
            raise ValueError(f"element {x} out of range")
        mask[x] = True
    return mask


def is_right_ideal(t: CayleyTable, subset: Iterable[int]) -> Verdict:
    """``0`` in I, and ``x * y`` in I whenever x in I and y anywhere."""
    mask = _members(t, subset)
    if not mask[0]:
        return fail((0,), "zero element not in subset")
    members = np.flatnonzero(mask)
    escapes = ~mask[t.table[members]]
    w = _first(escapes)
    if w is not None:
        return fail((int(members[w[0]]), w[1]), "x*y leaves the subset")
    return PASS


def is_subalgebra(t: CayleyTable, subset: Iterable[int]) -> Verdict:
    mask = _members(t, subset)
    if not mask[0]:
        return fail((0,), "zero element not in subset")
    members = np.flatnonzero(mask)
    w = _first(~mask[t.table[np.ix_(members, members)]])
    if w is not None:
        return fail((int(members[w[0]]), int(members[w[1]])), "x*y leaves the subset")
    return PASS


def is_closed_ideal(t: CayleyTable, subset: Iterable[int]) -> Verdict:
    subset = list(subset)
    verdict = is_right_ideal(t, subset)
    if not verdict:
        return verdict
    return is_subalgebra(t, subset)
