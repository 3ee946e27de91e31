"""Executable form of the inductive half-bound argument.

Each step takes a longest chain, locates where its profile switches from
surplus to deficit, and deletes one or two cover relations at that point.
Repeating until no relation is left and then walking back up rebuilds a cut
that gains exactly one crossing relation per step, while every deleted
relation count is checked along the way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import Chain, Poset, count_between_masks, is_cover, longest_chain, remove_relation
from .errors import AlreadyAntichain, ChainTooShort, ProfileViolation, ProofTraceError
from .maxcut import Classification, Cut, classify, max_dicut


@dataclass(frozen=True)
class CaseProfile:
    case: str  # "I" or "II"
    beta: int  # 1-based position on the top-down chain


@dataclass(frozen=True)
class TraceStep:
    """One deletion step.

    ``actors`` is ``(b, a, w)`` in case I and ``(b, w)`` in case II.
    ``cut_adjustment`` lists the ``(element, side)`` moves, side ``"B"`` or
    ``"U"``, applied when lifting the cut of the smaller poset back.
    """

    case: str
    subcase: int
    chain: tuple[int, ...]
    beta: int
    actors: tuple[int, ...]
    removed: tuple[tuple[int, int], ...]
    m_before: int
    m_after: int
    cut_adjustment: tuple[tuple[int, str], ...]

    @property
    def label(self) -> str:
        return f"{self.case}.{self.subcase}"


@dataclass(frozen=True)
class ProofTrace:
    steps: tuple[TraceStep, ...]
    base_n: int
    final_cut: Cut

    @property
    def case_one(self) -> int:
        return sum(s.case == "I" for s in self.steps)

    @property
    def case_two(self) -> int:
        return sum(s.case == "II" for s in self.steps)


def _fail(msg: str):
    raise ProfileViolation(msg)


def chain_profile(p: Poset, c: Chain, cls: Classification | None = None) -> CaseProfile:
    """Check the facts a longest chain must satisfy and pick the case.

    Case I: exactly one balanced element, strictly inside the chain, with
    surplus elements above it and deficit elements below.  Case II: no
    balanced element; the chain is surplus down to position ``beta - 1`` and
    deficit from ``beta`` on.
    """
    u = c.elements
    t = len(u)
    if t < 2:
        raise ChainTooShort(f"chain of length {t}")
    if cls is None:
        cls = classify(p)
    for j in range(t - 1):
        if not is_cover(p, u[j + 1], u[j]):
            _fail(f"{u[j + 1]} is not covered by {u[j]} on the chain")
    sign = [int(cls.sign[v]) for v in u]
    if sign[0] >= 0:
        _fail(f"top of chain {u[0]} is not surplus")
    if sign[-1] <= 0:
        _fail(f"bottom of chain {u[-1]} is not deficit")
    zeros = [i for i, s in enumerate(sign) if s == 0]
    if len(zeros) > 1:
        _fail(f"several balanced elements on one chain: {[u[i] for i in zeros]}")
    if zeros:
        i = zeros[0]
        if not (all(s < 0 for s in sign[:i]) and all(s > 0 for s in sign[i + 1:])):
            _fail(f"chain profile {sign} is not monotone around the balanced element")
        return CaseProfile("I", i + 1)
    i = sign.index(1)
    if not all(s > 0 for s in sign[i:]):
        _fail(f"chain profile {sign} is not monotone")
    return CaseProfile("II", i + 1)


def _subcase(case: str, b_deficit: bool, w_surplus: bool) -> int:
    if b_deficit and w_surplus:
        return 1
    if b_deficit:
        return 2
    if w_surplus:
        return 3
    if case == "I":
        _fail("case I with both b and w balanced afterwards")
    return 4


_ADJUST = {
    1: lambda b, w: (),
    2: lambda b, w: ((w, "U"),),
    3: lambda b, w: ((b, "B"),),
    4: lambda b, w: ((w, "U"), (b, "B")),
}


def inductive_step(p: Poset) -> tuple[Poset, TraceStep]:
    """Delete one or two covers of ``p`` along its longest chain."""
    if p.m == 0:
        raise AlreadyAntichain("no relation left to delete")
    cls = classify(p)
    c = longest_chain(p)
    prof = chain_profile(p, c, cls)
    u, beta = c.elements, prof.beta
    if prof.case == "I":
        b, a, w = u[beta], u[beta - 1], u[beta - 2]
        removed = ((b, a), (a, w))
        actors = (b, a, w)
    else:
        b, w = u[beta - 1], u[beta - 2]
        removed = ((b, w),)
        actors = (b, w)
    if not (cls.sign[b] > 0 and cls.sign[w] < 0):
        _fail(f"actors b={b}, w={w} are not deficit/surplus")
    q = p
    for x, y in removed:
        q = remove_relation(q, x, y)
    after = classify(q)
    if prof.case == "I" and after.sign[a] != 0:
        _fail(f"middle element {a} is not balanced after deletion")
    if after.sign[b] < 0 or after.sign[w] > 0:
        _fail(f"b={b} or w={w} switched sides")
    sub = _subcase(prof.case, after.sign[b] > 0, after.sign[w] < 0)
    step = TraceStep(
        case=prof.case,
        subcase=sub,
        chain=u,
        beta=beta,
        actors=actors,
        removed=removed,
        m_before=p.m,
        m_after=q.m,
        cut_adjustment=_ADJUST[sub](b, w),
    )
    expected = 2 if prof.case == "I" else 1
    if step.m_before - step.m_after != expected:
        raise ProofTraceError(f"step removed {step.m_before - step.m_after} relations")
    return q, step


def run_induction(p: Poset) -> ProofTrace:
    """Delete covers down to an antichain, then rebuild the cut bottom-up.

    The rebuilt cut is checked at every level: one more crossing relation
    than the level below, all deficit elements at the bottom and all surplus
    elements on top.
    """
    steps: list[TraceStep] = []
    q = p
    while q.m > 0:
        q, step = inductive_step(q)
        steps.append(step)

    rel = q.rel.copy()
    bmask = np.ones(p.n, dtype=bool)  # base case: every element balanced
    size = 0
    for k in range(len(steps) - 1, -1, -1):
        step = steps[k]
        for x, y in step.removed:
            rel[x, y] = True
        level = Poset._trusted(rel.copy())
        for v, side in step.cut_adjustment:
            bmask[v] = side == "B"
        new = count_between_masks(level, bmask, ~bmask)
        cls = classify(level)
        if new != size + 1:
            raise ProofTraceError(f"step {k + 1} ({step.label}): size {size} -> {new}, expected +1")
        if (cls.sign > 0)[~bmask].any() or (cls.sign < 0)[bmask].any():
            raise ProofTraceError(f"step {k + 1} ({step.label}): deficit/surplus on the wrong side")
        size = new
    final = Cut(
        frozenset(np.flatnonzero(bmask).tolist()),
        frozenset(np.flatnonzero(~bmask).tolist()),
        size,
    )
    trace = ProofTrace(tuple(steps), q.n, final)
    if p.m != 2 * trace.case_one + trace.case_two:
        raise ProofTraceError("relation count does not match the step counts")
    if 2 * size < p.m:
        raise ProofTraceError(f"final size {size} below half of {p.m}")
    return trace


def check_agreement(p: Poset, trace: ProofTrace) -> None:
    """The rebuilt cut must be as large as the direct maximum cut."""
    direct = max_dicut(p).size
    if trace.final_cut.size != direct:
        raise ProofTraceError(f"trace size {trace.final_cut.size} != direct size {direct}")


def _fmt_pairs(pairs) -> str:
    return ",".join(f"({x},{y})" for x, y in pairs)


def format_step(index: int, step: TraceStep) -> str:
    names = ("b", "a", "w") if step.case == "I" else ("b", "w")
    actors = ",".join(f"{k}={v}" for k, v in zip(names, step.actors))
    moves = ",".join(f"{v}->{side}" for v, side in step.cut_adjustment) or "none"
    return (
        f"step {index} case {step.label} beta={step.beta} {actors} "
        f"removed={_fmt_pairs(step.removed)} m={step.m_before}->{step.m_after} move={moves}"
    )


def format_trace(trace: ProofTrace) -> Iterator[str]:
    """One line per step, then the rebuilt cut."""
    if not trace.steps:
        yield f"trace empty: antichain on {trace.base_n} elements"
    for i, step in enumerate(trace.steps, 1):
        yield format_step(i, step)
    c = trace.final_cut
    yield (
        f"final B={' '.join(map(str, sorted(c.b)))} U={' '.join(map(str, sorted(c.u)))} "
        f"size={c.size} caseI={trace.case_one} caseII={trace.case_two}"
    )
