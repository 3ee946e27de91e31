"""Benchmark rows and the doubling experiment for the exact algorithm."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Sequence

from .core import Poset
from .generators import FamilySpec, chain, generate
from .maxcut import classify, local_search, max_dicut, random_cut

ALGORITHMS = ("theorem", "local", "random")


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    m: int
    algorithm: str
    size: int
    ratio: float
    seconds: float


@dataclass(frozen=True)
class ScalingRow:
    n: int
    m: int
    seconds: float
    seconds_per_relation: float
    doubling_ratio: float | None


def _ratio(size: int, m: int) -> float:
    return size / m if m else 0.0


def _fresh(p: Poset) -> Poset:
    # same (read-only) matrix, empty degree caches
    return Poset._trusted(p.rel)


def theorem_once(p: Poset):
    """Classification plus exact cut from scratch; what the scaling test times."""
    q = _fresh(p)
    classify(q)
    return max_dicut(q)


def time_call(fn, *args, repeats: int = 5) -> float:
    """Best wall time of ``repeats`` calls after one discarded warm-up call."""
    fn(*args)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_instance(spec: FamilySpec, trials: int, seed: int) -> list[BenchRow]:
    p = generate(spec)
    name = str(spec)
    rows = []
    cut = max_dicut(p)
    rows.append(BenchRow(name, p.n, p.m, "theorem", cut.size, _ratio(cut.size, p.m),
                         time_call(theorem_once, p, repeats=3)))
    for i in range(trials):
        start = random_cut(p, (seed, i))
        t0 = time.perf_counter()
        c = local_search(p, start)
        dt = time.perf_counter() - t0
        rows.append(BenchRow(name, p.n, p.m, "local", c.size, _ratio(c.size, p.m), dt))
    for i in range(trials):
        t0 = time.perf_counter()
        c = random_cut(p, (seed, i))
        dt = time.perf_counter() - t0
        rows.append(BenchRow(name, p.n, p.m, "random", c.size, _ratio(c.size, p.m), dt))
    return rows


def run_bench(specs: Iterable[FamilySpec], trials: int = 5, seed: int = 0) -> list[BenchRow]:
    """Rows for every spec, ordered by spec then algorithm then trial."""
    rows = []
    for spec in specs:
        rows.extend(bench_instance(spec, trials, seed))
    return rows


def doubling_experiment(ns: Sequence[int] = (500, 1000, 2000, 4000), repeats: int = 7) -> list[ScalingRow]:
    """Time the exact algorithm on chains of doubling length.

    A chain on n elements has n(n-1)/2 relations, so linear time in the
    relation count shows up as a time ratio near 4 per doubling.
    """
    rows = []
    prev = None
    for n in ns:
        p = chain(n)
        dt = time_call(theorem_once, p, repeats=repeats)
        ratio = dt / prev if prev else None
        rows.append(ScalingRow(n, p.m, dt, dt / max(p.m, 1), ratio))
        prev = dt
    return rows


def to_csv(rows: Sequence) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f.name for f in fields(rows[0])])
    for r in rows:
        w.writerow(["" if v is None else (f"{v:.6g}" if isinstance(v, float) else v) for v in astuple(r)])
    return buf.getvalue()
