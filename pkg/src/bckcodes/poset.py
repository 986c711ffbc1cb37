"""Finite partial orders, their cut vectors, codes and Hasse diagrams."""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

import numpy as np

from .codes import BlockCode, Codeword


class NotAPartialOrder(ValueError):
    """A relation failed reflexivity, antisymmetry or transitivity.

    ``prop`` is one of ``"reflexive"``, ``"antisymmetric"``,
    ``"transitive"``; ``witness`` is the smallest offending tuple.
    """

    def __init__(self, prop: str, witness: tuple[int, ...]):
        self.prop = prop
        self.witness = witness
        super().__init__(f"relation is not {prop}: witness {witness}")


def order_violation(rel: np.ndarray) -> tuple[str, tuple[int, ...]] | None:
    """Return ``(property, witness)`` for the first poset axiom ``rel`` breaks."""
    n = rel.shape[0]
    bad = np.flatnonzero(~rel.diagonal())
    if bad.size:
        return "reflexive", (int(bad[0]),)
    both = rel & rel.T & ~np.eye(n, dtype=bool)
    hits = np.argwhere(both)
    if hits.size:
        return "antisymmetric", tuple(int(v) for v in hits[0])
    # (a, b, c) with a<=b, b<=c but not a<=c
    hits = np.argwhere(rel[:, :, None] & rel[None, :, :] & ~rel[:, None, :])
    if hits.size:
        return "transitive", tuple(int(v) for v in hits[0])
    return None


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure (Warshall)."""
    out = np.array(rel, dtype=bool, copy=True)
    np.fill_diagonal(out, True)
    for k in range(out.shape[0]):
        out |= out[:, k, None] & out[None, k, :]
    return out


class Poset:
    """A partial order on ``0..n-1`` given by its relation matrix.

    ``leq[a, b]`` is true iff ``a <= b``. Construction validates the three
    poset axioms and raises :class:`NotAPartialOrder` otherwise.
    """

    def __init__(self, leq, labels: Sequence[str] | None = None):
        rel = np.array(leq, dtype=bool)
        if rel.ndim != 2 or rel.shape[0] != rel.shape[1]:
            raise ValueError(f"relation matrix must be square, got shape {rel.shape}")
        problem = order_violation(rel)
        if problem is not None:
            raise NotAPartialOrder(*problem)
        rel.setflags(write=False)
        self.leq = rel
        if labels is None:
            labels = [str(i) for i in range(rel.shape[0])]
        if len(labels) != rel.shape[0]:
            raise ValueError("one label per element required")
        self.labels = tuple(labels)

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[tuple[int, int]], labels=None) -> Poset:
        rel = np.zeros((n, n), dtype=bool)
        for a, b in covers:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"cover pair ({a}, {b}) out of range for n={n}")
            rel[a, b] = True
        return cls(transitive_closure(rel), labels)

    @property
    def n(self) -> int:
        return self.leq.shape[0]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.leq.shape == other.leq.shape and bool((self.leq == other.leq).all())

    def __hash__(self) -> int:
        return hash(self.leq.tobytes())

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={hasse_edges(self)})"

    def dual(self) -> Poset:
        return Poset(self.leq.T, self.labels)

    def relabel(self, perm: Sequence[int]) -> Poset:
        """Poset whose element ``perm[a]`` plays the role of old element ``a``."""
        perm = np.asarray(perm)
        inv = np.argsort(perm)
        return Poset(self.leq[np.ix_(inv, inv)], [self.labels[i] for i in inv])


def cut_vector(p: Poset, q: int) -> Codeword:
    """Codeword whose bit ``b`` is 1 iff ``q <= b``."""
    if not 0 <= q < p.n:
        raise IndexError(f"element {q} out of range for poset of size {p.n}")
    return Codeword(p.leq[q])


def poset_to_code(p: Poset) -> BlockCode:
    return BlockCode([cut_vector(p, q) for q in range(p.n)])


def minimum(p: Poset) -> int | None:
    below_all = np.flatnonzero(p.leq.all(axis=1))
    return int(below_all[0]) if below_all.size else None


def maximum(p: Poset) -> int | None:
    return minimum(p.dual())


def minimal_elements(p: Poset) -> list[int]:
    strictly_below = p.leq & ~np.eye(p.n, dtype=bool)
    return [int(b) for b in np.flatnonzero(~strictly_below.any(axis=0))]


def hasse_edges(p: Poset) -> list[tuple[int, int]]:
    """Covering pairs ``(a, b)``: ``a < b`` with nothing strictly between."""
    strict = p.leq & ~np.eye(p.n, dtype=bool)
    through = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
    return [(int(a), int(b)) for a, b in np.argwhere(strict & ~through)]


def to_dot(p: Poset, name: str = "hasse") -> str:
    """Graphviz digraph of the covering relation, edges lower -> upper."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, label in enumerate(p.labels):
        lines.append(f'  {i} [label="{label}"];')
    for a, b in hasse_edges(p):
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_bck(p: Poset):
    """The BCK-algebra of a poset with least element.

    ``x * y = 0`` when ``x <= y`` and ``x`` otherwise, after moving the
    least element to index 0. Element labels follow the renumbering.
    """
    from .algebra import CayleyTable

    low = minimal_elements(p)
    if len(low) != 1:
        raise ValueError(f"poset must have a unique minimum, minimal elements are {low}")
    theta = low[0]
    order = [theta] + [i for i in range(p.n) if i != theta]
    leq = p.leq[np.ix_(order, order)]
    table = np.where(leq, 0, np.arange(p.n)[:, None])
    return CayleyTable(table, labels=[p.labels[i] for i in order])


def all_posets(n: int) -> Iterator[Poset]:
    """Every labeled partial order on ``0..n-1``.

    Grows posets one element at a time: the new top-index element gets a
    down-set ``D`` and an up-set ``U`` of the existing order with every
    member of ``D`` already below every member of ``U``.
    """
    for rel in _relations(n):
        yield Poset(rel)


def _relations(n: int) -> Iterator[np.ndarray]:
    if n == 0:
        yield np.zeros((0, 0), dtype=bool)
        return
    k = n - 1
    for rel in _relations(k):
        downs = [s for s in _subsets(k) if _is_down_set(rel, s)]
        ups = [s for s in _subsets(k) if _is_down_set(rel.T, s)]
        for d in downs:
            for u in ups:
                if d & u:
                    continue
                if not all(rel[a, b] for a in d for b in u):
                    continue
                out = np.zeros((n, n), dtype=bool)
                out[:k, :k] = rel
                out[k, k] = True
                for a in d:
                    out[a, k] = True
                for b in u:
                    out[k, b] = True
                yield out


def _subsets(k: int) -> Iterator[frozenset[int]]:
    for mask in range(1 << k):
        yield frozenset(i for i in range(k) if mask >> i & 1)


def _is_down_set(rel: np.ndarray, s: frozenset[int]) -> bool:
    return all(rel[a, b] <= (a in s) for b in s for a in range(rel.shape[0]))
