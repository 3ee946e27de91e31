"""Deterministic poset families and exhaustive small-poset enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import Poset, _closure
from .errors import InvalidSpec, TooLarge

FAMILIES = ("chain", "antichain", "boolean_lattice", "grid", "divisor", "random_dag")

_ALIASES = {
    "chain": "chain",
    "antichain": "antichain",
    "boolean": "boolean_lattice",
    "boolean_lattice": "boolean_lattice",
    "grid": "grid",
    "divisor": "divisor",
    "random": "random_dag",
    "random_dag": "random_dag",
}

_ARITY = {"chain": 1, "antichain": 1, "boolean_lattice": 1, "grid": 2, "divisor": 1, "random_dag": 1}

_SHORT = {"boolean_lattice": "boolean", "random_dag": "random"}

MAX_SMALL_N = 5


@dataclass(frozen=True)
class FamilySpec:
    """A poset family with its parameters.

    ``params`` is ``(n,)`` for chain, antichain and random_dag, ``(k,)`` for
    the Boolean lattice on k atoms, ``(a, b)`` for the product of an a-chain
    and a b-chain, and ``(N,)`` for the divisors of N.
    """

    family: str
    params: tuple[int, ...]
    seed: int | None = None
    edge_prob: float | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidSpec(f"unknown family {self.family!r}")
        if len(self.params) != _ARITY[self.family]:
            raise InvalidSpec(f"{self.family} takes {_ARITY[self.family]} parameter(s)")
        for v in self.params:
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or v < 1:
                raise InvalidSpec(f"parameters must be positive integers, got {v!r}")
        if self.family == "random_dag":
            if self.edge_prob is None or not 0.0 <= self.edge_prob <= 1.0:
                raise InvalidSpec(f"edge_prob must lie in [0, 1], got {self.edge_prob!r}")
            if self.seed is None:
                object.__setattr__(self, "seed", 0)
        elif self.edge_prob is not None:
            raise InvalidSpec("edge_prob only applies to random_dag")
        if self.family == "boolean_lattice" and self.params[0] > 16:
            raise InvalidSpec("boolean lattice limited to 16 atoms")

    def __str__(self):
        name = _SHORT.get(self.family, self.family)
        parts = [name, *map(str, self.params)]
        if self.family == "random_dag":
            parts += [repr(self.edge_prob), f"seed={self.seed}"]
        return ":".join(parts)


def parse_family(text: str, default_seed: int = 0) -> FamilySpec:
    """Parse ``chain:20``, ``boolean:4``, ``grid:3:4``, ``divisor:360``,
    ``antichain:7`` or ``random:50:0.1[:seed=7]``."""
    fields = text.strip().split(":")
    family = _ALIASES.get(fields[0])
    if family is None:
        raise InvalidSpec(f"unknown family in {text!r}")
    args = fields[1:]
    seed = default_seed
    edge_prob = None
    try:
        if family == "random_dag":
            if args and args[-1].startswith("seed="):
                seed = int(args.pop()[5:])
            if len(args) != 2:
                raise InvalidSpec(f"expected random:N:P[:seed=S], got {text!r}")
            edge_prob = float(args.pop())
            return FamilySpec(family, (int(args[0]),), seed=seed, edge_prob=edge_prob)
        return FamilySpec(family, tuple(int(a) for a in args))
    except ValueError as exc:
        if isinstance(exc, InvalidSpec):
            raise
        raise InvalidSpec(f"bad number in {text!r}") from None


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def chain(n: int) -> Poset:
    """Total order 0 < 1 < ... < n-1."""
    return Poset._trusted(np.triu(np.ones((n, n), dtype=bool), 1))


def antichain(n: int) -> Poset:
    return Poset._trusted(np.zeros((n, n), dtype=bool))


def boolean_lattice(k: int) -> Poset:
    """Subsets of a k-set by proper inclusion; element IDs are the bit masks."""
    s = np.arange(1 << k)
    rel = ((s[:, None] & s[None, :]) == s[:, None]) & (s[:, None] != s[None, :])
    return Poset._trusted(rel)


def grid(a: int, b: int) -> Poset:
    """Product of an a-chain and a b-chain; ``(i, j)`` has ID ``i * b + j``."""
    i, j = np.divmod(np.arange(a * b), b)
    le = (i[:, None] <= i[None, :]) & (j[:, None] <= j[None, :])
    return Poset._trusted(le & ~np.eye(a * b, dtype=bool))


def divisor(n: int) -> Poset:
    """Divisors of n under divisibility, IDs in increasing order of divisor."""
    d = np.array(_divisors(n), dtype=np.int64)
    rel = (d[None, :] % d[:, None] == 0) & (d[:, None] != d[None, :])
    return Poset._trusted(rel)


def random_dag(n: int, edge_prob: float, seed) -> Poset:
    """Closure of a random DAG whose edges all point from lower to higher ID."""
    rng = np.random.default_rng(seed)
    adj = np.triu(rng.random((n, n)) < edge_prob, 1)
    succ = [np.flatnonzero(row).tolist() for row in adj]
    return Poset._trusted(_closure(n, succ, list(range(n))))


def generate(spec: FamilySpec) -> Poset:
    f, params = spec.family, spec.params
    if f == "chain":
        return chain(params[0])
    if f == "antichain":
        return antichain(params[0])
    if f == "boolean_lattice":
        return boolean_lattice(params[0])
    if f == "grid":
        return grid(*params)
    if f == "divisor":
        return divisor(params[0])
    return random_dag(params[0], spec.edge_prob, spec.seed)


def enumerate_small_posets(n: int) -> Iterator[Poset]:
    """Every labeled poset on ``n <= 5`` elements.

    Each unordered pair is unrelated or ordered one way or the other; the
    transitive assignments are kept.  Counts: 1, 1, 3, 19, 219, 4231.
    """
    if n < 0:
        raise InvalidSpec("n must be non-negative")
    if n > MAX_SMALL_N:
        raise TooLarge(f"exhaustive enumeration limited to n <= {MAX_SMALL_N}")
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        above = [0] * n
        for (x, y), s in zip(pairs, states):
            if s == 1:
                above[x] |= 1 << y
            elif s == 2:
                above[y] |= 1 << x
        if all(
            above[y] & ~above[x] == 0
            for x in range(n)
            for y in range(n)
            if above[x] >> y & 1
        ):
            rel = np.array([[above[x] >> y & 1 for y in range(n)] for x in range(n)], dtype=bool)
            yield Poset._trusted(rel.reshape(n, n))
