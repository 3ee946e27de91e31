"""Maximum directed cuts of posets.

The exact algorithm puts every element with more elements above it than
below it on the bottom side, every element with fewer on the top side, and
the balanced rest on the bottom side (their placement does not change the
size).  The result is a maximum cut of size at least ``m / 2``, computed with
two passes over the relation matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .core import Poset, count_between_masks
from .errors import NotAPartition, TooLargeForOracle

ORACLE_MAX_N = 24


class Category(enum.Enum):
    DEFICIT = "deficit"
    SURPLUS = "surplus"
    BALANCED = "balanced"


@dataclass(frozen=True, eq=False)
class Classification:
    """Deficit / surplus / balanced split of a poset's elements.

    ``up`` and ``down`` are the per-element counts of elements above and
    below; ``sign`` is ``+1`` (deficit), ``-1`` (surplus) or ``0`` (balanced).
    """

    up: np.ndarray
    down: np.ndarray
    sign: np.ndarray

    @cached_property
    def delta(self) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.sign > 0).tolist())

    @cached_property
    def sigma(self) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.sign < 0).tolist())

    @cached_property
    def lambda_(self) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.sign == 0).tolist())

    def category(self, v: int) -> Category:
        s = self.sign[v]
        if s > 0:
            return Category.DEFICIT
        if s < 0:
            return Category.SURPLUS
        return Category.BALANCED

    @property
    def categories(self) -> tuple[Category, ...]:
        return tuple(self.category(v) for v in range(len(self.sign)))


@dataclass(frozen=True)
class Cut:
    """A partition ``(b, u)``; ``size`` counts relations from ``b`` up to ``u``."""

    b: frozenset[int]
    u: frozenset[int]
    size: int


def classify(p: Poset) -> Classification:
    up, down = p.up, p.down
    sign = np.sign(up - down).astype(np.int8)
    sign.setflags(write=False)
    return Classification(up=up, down=down, sign=sign)


def _partition_mask(p: Poset, b: Iterable[int], u: Iterable[int]) -> np.ndarray:
    b, u = frozenset(b), frozenset(u)
    bad = [v for v in b | u if not (isinstance(v, (int, np.integer)) and 0 <= v < p.n)]
    if bad:
        raise NotAPartition(f"elements {sorted(bad)} out of range 0..{p.n - 1}")
    if b & u:
        raise NotAPartition(f"elements {sorted(b & u)} on both sides")
    if len(b) + len(u) != p.n:
        missing = sorted(set(range(p.n)) - b - u)
        raise NotAPartition(f"elements {missing} on neither side")
    return p.mask(b)


def _from_mask(p: Poset, bmask: np.ndarray) -> Cut:
    b = np.flatnonzero(bmask).tolist()
    u = np.flatnonzero(~bmask).tolist()
    return Cut(frozenset(b), frozenset(u), count_between_masks(p, bmask, ~bmask))


def make_cut(p: Poset, b: Iterable[int], u: Iterable[int] | None = None) -> Cut:
    """Cut with bottom side ``b``; ``u`` defaults to the complement."""
    b = frozenset(b)
    if u is None:
        u = frozenset(range(p.n)) - b
    return _from_mask(p, _partition_mask(p, b, u))


def cut_size(p: Poset, c: Cut) -> int:
    bmask = _partition_mask(p, c.b, c.u)
    return count_between_masks(p, bmask, ~bmask)


def max_dicut(p: Poset) -> Cut:
    """Maximum directed cut: bottom = deficit and balanced, top = surplus."""
    return _from_mask(p, p.up >= p.down)


def verify_half_bound(p: Poset, c: Cut) -> bool:
    return 2 * cut_size(p, c) >= p.m


def all_cut_sizes(p: Poset) -> np.ndarray:
    """Size of every cut, indexed by the bit mask of its bottom side.

    Element ``v`` is bit ``v``.  Built incrementally: the cuts whose highest
    bottom element is ``k`` are the cuts on ``0..k-1`` plus the gain of
    moving ``k`` from the top side to the bottom side.
    """
    n = p.n
    if n > ORACLE_MAX_N:
        raise TooLargeForOracle(f"n={n} exceeds the exhaustive limit {ORACLE_MAX_N}")
    sizes = np.zeros(1 << n, dtype=np.int32)
    weights = (1 << np.arange(n, dtype=np.uint64)).astype(np.uint32)
    for k in range(n):
        lower = np.arange(1 << k, dtype=np.uint32)
        above = np.uint32(int(weights[p.rel[k]].sum()))
        below = np.uint32(int(weights[p.rel[:, k]].sum()))
        gain = (
            int(p.up[k])
            - np.bitwise_count(lower & above).astype(np.int32)
            - np.bitwise_count(lower & below).astype(np.int32)
        )
        sizes[1 << k: 2 << k] = sizes[: 1 << k] + gain
    return sizes


def brute_force_max_cut(p: Poset) -> Cut:
    """Exhaustive maximum cut; ties go to the numerically smallest bottom mask."""
    sizes = all_cut_sizes(p)
    best = int(np.argmax(sizes))
    bmask = np.array([(best >> v) & 1 for v in range(p.n)], dtype=bool)
    return _from_mask(p, bmask)


def random_cut(p: Poset, seed) -> Cut:
    """Each element goes to the bottom side independently with probability 1/2."""
    rng = np.random.default_rng(seed)
    return _from_mask(p, rng.random(p.n) < 0.5)


def _first_swap(p: Poset, bmask: np.ndarray):
    # x on top, y on bottom, x < y
    hits = np.argwhere(p.rel & (~bmask)[:, None] & bmask[None, :])
    if hits.size:
        return int(hits[0, 0]), int(hits[0, 1])
    return None


def single_move_gains(p: Poset, bmask: np.ndarray) -> np.ndarray:
    """Change in cut size from moving each element alone to the other side."""
    up_in_top = np.count_nonzero(p.rel[:, ~bmask], axis=1)
    down_in_bottom = np.count_nonzero(p.rel[bmask], axis=0)
    return np.where(bmask, down_in_bottom - up_in_top, up_in_top - down_in_bottom)


def _first_single_move(p: Poset, bmask: np.ndarray):
    gains = single_move_gains(p, bmask)
    top, bottom = ~bmask, bmask
    minimal_top = top & ~p.rel[top].any(axis=0)
    maximal_bottom = bottom & ~p.rel[:, bottom].any(axis=1)
    for candidates in (minimal_top, maximal_bottom):
        hits = np.flatnonzero(candidates & (gains > 0))
        if hits.size:
            return int(hits[0])
    return None


def local_search(p: Poset, start: Cut) -> Cut:
    """Improve ``start`` until no move applies.

    Moves, in order of preference: swap the lexicographically first pair
    ``x < y`` with ``x`` on top and ``y`` on the bottom; otherwise move the
    smallest minimal top element, or failing that the smallest maximal
    bottom element, whose move strictly increases the size.
    """
    bmask = _partition_mask(p, start.b, start.u).copy()
    size = count_between_masks(p, bmask, ~bmask)
    while True:
        swap = _first_swap(p, bmask)
        if swap is not None:
            x, y = swap
            bmask[x], bmask[y] = True, False
        else:
            v = _first_single_move(p, bmask)
            if v is None:
                break
            bmask[v] = not bmask[v]
        new = count_between_masks(p, bmask, ~bmask)
        if new <= size:
            raise AssertionError(f"local search move did not improve ({size} -> {new})")
        size = new
    return _from_mask(p, bmask)
