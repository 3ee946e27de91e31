"""Finite strict partial orders on the element IDs ``0..n-1``.

A :class:`Poset` stores its full comparability relation as a dense
``n x n`` boolean matrix, ``rel[x, y]`` being true iff ``x < y``.  All
values are immutable; every operation returns a new object.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    AntisymmetryViolation,
    CycleDetected,
    EmptyPoset,
    IdOutOfRange,
    NotACover,
    NotARelation,
    ReflexivePair,
    TransitivityViolation,
)


def _compose(rel: np.ndarray) -> np.ndarray:
    """Boolean product ``rel . rel``: entry (x, z) is set iff x<y<z for some y."""
    f = rel.astype(np.float32)
    return (f @ f) > 0.5


def check_axioms(rel: np.ndarray) -> None:
    """Raise the first violated partial-order axiom, with a witness."""
    n = rel.shape[0]
    if n == 0:
        return
    diag = np.flatnonzero(np.diagonal(rel))
    if diag.size:
        raise ReflexivePair(int(diag[0]))
    both = np.argwhere(rel & rel.T)
    if both.size:
        x, y = both[0]
        raise AntisymmetryViolation(int(x), int(y))
    missing = np.argwhere(_compose(rel) & ~rel)
    if missing.size:
        x, z = (int(v) for v in missing[0])
        y = int(np.flatnonzero(rel[x] & rel[:, z])[0])
        raise TransitivityViolation(x, y, z)


class Poset:
    """A validated finite poset.

    Build one with :func:`poset_from_relations`, :func:`poset_from_covers`
    or directly from a square boolean matrix.
    """

    def __init__(self, rel, *, validate: bool = True):
        # read-only boolean matrices are shared, anything else is copied
        if not (isinstance(rel, np.ndarray) and rel.dtype == bool and not rel.flags.writeable):
            rel = np.array(rel, dtype=bool, copy=True)
        if rel.ndim != 2 or rel.shape[0] != rel.shape[1]:
            raise ValueError("relation matrix must be square")
        if validate:
            check_axioms(rel)
        if rel.flags.writeable:
            rel.setflags(write=False)
        self.n = int(rel.shape[0])
        self.rel = rel
        self.m = int(np.count_nonzero(rel))

    @classmethod
    def _trusted(cls, rel: np.ndarray) -> "Poset":
        # Callers guarantee the axioms already hold.
        return cls(rel, validate=False)

    @cached_property
    def up(self) -> np.ndarray:
        """Per-element count of elements strictly above."""
        a = np.count_nonzero(self.rel, axis=1)
        a.setflags(write=False)
        return a

    @cached_property
    def down(self) -> np.ndarray:
        """Per-element count of elements strictly below."""
        a = np.count_nonzero(self.rel, axis=0)
        a.setflags(write=False)
        return a

    def less(self, x: int, y: int) -> bool:
        return bool(self.rel[x, y])

    def relations(self) -> Iterator[tuple[int, int]]:
        """All pairs ``(x, y)`` with ``x < y``, in lexicographic order."""
        for x, y in np.argwhere(self.rel):
            yield int(x), int(y)

    def validate(self) -> None:
        check_axioms(self.rel)

    def check_id(self, v) -> int:
        if isinstance(v, (bool, np.bool_)) or not isinstance(v, (int, np.integer)):
            raise TypeError(f"element IDs are integers, got {v!r}")
        if not 0 <= v < self.n:
            raise IdOutOfRange(v, self.n)
        return int(v)

    def mask(self, elements: Iterable[int]) -> np.ndarray:
        """Boolean membership vector for a set of element IDs."""
        out = np.zeros(self.n, dtype=bool)
        for v in elements:
            out[self.check_id(v)] = True
        return out

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.rel, other.rel))

    def __hash__(self):
        return hash((self.n, np.packbits(self.rel).tobytes()))

    def __repr__(self):
        return f"Poset(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class CoverSet:
    """Cover pairs ``(x, y)`` with ``x`` covered by ``y``, sorted."""

    pairs: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, pair):
        return tuple(pair) in set(self.pairs)


@dataclass(frozen=True)
class Chain:
    """A chain listed top-down: ``elements[0] > elements[1] > ...``."""

    elements: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]


def _check_pairs(n: int, pairs) -> list[tuple[int, int]]:
    if n < 0:
        raise ValueError("element count must be non-negative")
    out = []
    for x, y in pairs:
        for v in (x, y):
            if not 0 <= v < n:
                raise IdOutOfRange(v, n)
        out.append((int(x), int(y)))
    return out


def poset_from_relations(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """Build a poset from its complete list of strict relations ``x < y``.

    Duplicate pairs are ignored.  The pair set must already be transitively
    closed; nothing is added.
    """
    pairs = _check_pairs(n, pairs)
    rel = np.zeros((n, n), dtype=bool)
    for x, y in pairs:
        rel[x, y] = True
    return Poset(rel)


def _closure(n: int, succ: list[list[int]], bottom_up: list[int]) -> np.ndarray:
    reach = np.zeros((n, n), dtype=bool)
    for x in reversed(bottom_up):
        if succ[x]:
            idx = np.asarray(succ[x])
            reach[x, idx] = True
            reach[x] |= reach[idx].any(axis=0)
    return reach


def poset_from_covers(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """Build the poset generated by an acyclic set of pairs (e.g. a Hasse diagram).

    The transitive closure costs ``O(n * |pairs|)`` word operations on top of
    reading the input.
    """
    pairs = _check_pairs(n, pairs)
    ts = graphlib.TopologicalSorter({v: () for v in range(n)})
    succ: list[list[int]] = [[] for _ in range(n)]
    for x, y in sorted(set(pairs)):
        ts.add(y, x)
        succ[x].append(y)
    try:
        order = list(ts.static_order())
    except graphlib.CycleError as exc:
        raise CycleDetected(exc.args[1]) from None
    return Poset._trusted(_closure(n, succ, order))


def transitive_reduction(p: Poset) -> CoverSet:
    """Return exactly the cover pairs of ``p``."""
    covers = p.rel & ~_compose(p.rel)
    return CoverSet(tuple((int(x), int(y)) for x, y in np.argwhere(covers)))


def between(p: Poset, x: int, y: int) -> np.ndarray:
    """Elements ``z`` with ``x < z < y``."""
    return np.flatnonzero(p.rel[x] & p.rel[:, y])


def is_cover(p: Poset, x: int, y: int) -> bool:
    x, y = p.check_id(x), p.check_id(y)
    return bool(p.rel[x, y]) and between(p, x, y).size == 0


def remove_relation(p: Poset, x: int, y: int) -> Poset:
    """Delete the single relation ``x < y``.

    Only a cover may be deleted; removing any other relation would break
    transitivity, and that is reported as :class:`NotACover`.
    """
    x, y = p.check_id(x), p.check_id(y)
    if not p.rel[x, y]:
        raise NotARelation(x, y)
    mid = between(p, x, y)
    if mid.size:
        raise NotACover(x, y, int(mid[0]))
    rel = p.rel.copy()
    rel[x, y] = False
    # deleting a cover from a partial order leaves a partial order
    return Poset._trusted(rel)


def e_count(p: Poset, xs: Iterable[int], ys: Iterable[int]) -> int:
    """Number of pairs ``(x, y)`` in ``xs`` x ``ys`` with ``x < y``."""
    return count_between_masks(p, p.mask(xs), p.mask(ys))


def count_between_masks(p: Poset, xmask: np.ndarray, ymask: np.ndarray) -> int:
    return int(np.count_nonzero(p.rel[xmask][:, ymask]))


def up_degree(p: Poset, v: int) -> int:
    return int(p.up[p.check_id(v)])


def down_degree(p: Poset, v: int) -> int:
    return int(p.down[p.check_id(v)])


def heights(p: Poset) -> np.ndarray:
    """Length of the longest chain having each element as its top."""
    h = np.ones(p.n, dtype=np.int64)
    # strictly fewer elements lie below x than below any y > x
    for v in np.argsort(p.down, kind="stable"):
        below = p.rel[:, v]
        if below.any():
            h[v] = h[below].max() + 1
    return h


def longest_chain(p: Poset) -> Chain:
    """A longest chain, top-down, choosing the smallest ID at every step.

    Any element directly preceding the current one on a longest chain is
    necessarily covered by it, so consecutive elements are covers.
    """
    if p.n == 0:
        raise EmptyPoset("longest chain of the empty poset")
    h = heights(p)
    top = int(np.flatnonzero(h == h.max())[0])
    chain = [top]
    while h[chain[-1]] > 1:
        cur = chain[-1]
        nxt = np.flatnonzero(p.rel[:, cur] & (h == h[cur] - 1))
        chain.append(int(nxt[0]))
    return Chain(tuple(chain))


def is_upward_closed(p: Poset, s: Iterable[int]) -> bool:
    """x in s and y > x imply y in s (an 'ideal' in the upward convention)."""
    mask = p.mask(s)
    return not p.rel[mask][:, ~mask].any()


def is_downward_closed(p: Poset, s: Iterable[int]) -> bool:
    """y in s and x < y imply x in s."""
    mask = p.mask(s)
    return not p.rel[~mask][:, mask].any()


def is_antichain(p: Poset, s: Iterable[int]) -> bool:
    mask = p.mask(s)
    return not p.rel[mask][:, mask].any()
