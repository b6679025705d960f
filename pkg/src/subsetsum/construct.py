"""Stage-by-stage constructions of A with P(A) = N \\ B.

Two families are supported:

* the recurrence family (``BSpec.thm11``): stages k = 3, 4, ...; each stage
  after the base adds three elements and P(A_k) is [0, b_k + b_{k-1}] minus
  b_1..b_k and the "terminal" values b_k + b_{k-1} - b_i;
* arithmetic progressions (``BSpec.ap``): stages k = 2, 3, ...; each stage
  after the base adds 2^(k-1) d and P(A_k) is [0, 2b_1 + (2^k - 1)d] minus the
  first 2^k progression terms.

Every stage carries its expected :class:`HolePattern`; ``subsetsum.verify``
checks it against the bit-vector oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInput, NoBaseConstruction, Overflow, checked
from .sequences import BSpec, gen_b_ap, gen_b_thm11
from .sumset import HolePattern


@dataclass(frozen=True)
class Stage:
    k: int
    added: tuple[int, ...]
    elements: tuple[int, ...]
    expected: HolePattern

    @property
    def span(self) -> int:
        return self.expected.span


@dataclass(frozen=True)
class ConstructionTrace:
    bspec: BSpec
    steps: tuple[Stage, ...]

    def stage(self, k: int) -> Stage:
        for st in self.steps:
            if st.k == k:
                return st
        raise KeyError(k)

    @property
    def final(self) -> Stage:
        return self.steps[-1]


def build_a1(b1: int) -> list[int]:
    """Distinct positive parts summing to ``b1 - 1`` whose subset sums fill ``[0, b1 - 1]``.

    Depth-first over increasing lists with ``a_{i+1} <= 1 + (a_1 + ... + a_i)``,
    trying the largest admissible next part first.
    """
    if b1 < 2:
        raise InvalidInput(f"b1 must be >= 2, got {b1}")
    checked(b1)
    target = b1 - 1

    def dfs(parts: list[int], total: int) -> list[int] | None:
        if total == target:
            return parts
        last = parts[-1] if parts else 0
        for a in range(min(total + 1, target - total), last, -1):
            found = dfs(parts + [a], total + a)
            if found is not None:
                return found
        return None

    found = dfs([], 0)
    if found is None:
        raise NoBaseConstruction(f"no complete list of distinct parts sums to {target}")
    return found


def expected_pattern_fact1(b: Sequence[int], k: int) -> HolePattern:
    if k < 3:
        raise InvalidInput(f"stage k must be >= 3, got {k}")
    if len(b) < k:
        raise InvalidInput(f"need {k} terms of B, got {len(b)}")
    span = checked(b[k - 1] + b[k - 2])
    if k == 3:
        terminal = [span - b[0]]
    else:
        terminal = [span - b[i] for i in range(k - 2)]
    return HolePattern.from_holes(span, list(b[:k]) + terminal)


def expected_pattern_fact2(b1: int, d: int, k: int) -> HolePattern:
    if k < 2:
        raise InvalidInput(f"stage k must be >= 2, got {k}")
    n = 1 << k
    span = checked(2 * b1 + (n - 1) * d)
    return HolePattern(span, tuple(gen_b_ap(b1, d, n)))


def fact1_additions(b: Sequence[int], k: int) -> tuple[int, int, int]:
    """Elements taking A_k to A_{k+1} (k >= 3), in increasing order.

    ``b_k + 2b_{k-2} < b_k + b_{k-1} - b_{k-2} < b_k + 2b_{k-1} - b_{k-2}``.
    """
    bk, bk1, bk2 = b[k - 1], b[k - 2], b[k - 3]
    return (
        checked(bk + 2 * bk2),
        checked(bk + bk1 - bk2),
        checked(bk + 2 * bk1 - bk2),
    )


def _extend(elements: tuple[int, ...], added: Sequence[int], k: int) -> tuple[int, ...]:
    present = set(elements)
    for a in added:
        if a in present:
            raise AssertionError(f"stage {k} re-adds element {a}")
        present.add(a)
    return tuple(sorted(present))


def _check_span(stage: Stage) -> None:
    if sum(stage.elements) != stage.span:
        raise AssertionError(
            f"stage {stage.k}: element sum {sum(stage.elements)} != span {stage.span}"
        )


def build_a_thm11(b1: int, k_max: int) -> ConstructionTrace:
    if b1 < 11:
        raise InvalidInput(f"b1 must be >= 11, got {b1}")
    if k_max < 3:
        raise InvalidInput(f"k_max must be >= 3, got {k_max}")
    bspec = BSpec.thm11(b1)
    try:
        b = gen_b_thm11(b1, 3)
    except Overflow as exc:
        raise Overflow(str(exc), stage=3) from exc
    b1_, b2, _ = b
    base = [b1_ + 1, b1_ + 2, b1_ + 3, b1_ + b2, 2 * b2 - 2 * b1_ + 2]
    try:
        base = [checked(a) for a in base]
        elements = _extend(tuple(build_a1(b1)), base, 3)
        steps = [Stage(3, elements, elements, expected_pattern_fact1(b, 3))]
    except Overflow as exc:
        raise Overflow(str(exc), stage=3) from exc
    _check_span(steps[-1])
    for k in range(4, k_max + 1):
        try:
            b = gen_b_thm11(b1, k)
            added = fact1_additions(b, k - 1)
            expected = expected_pattern_fact1(b, k)
        except Overflow as exc:
            raise Overflow(f"stage {k}: {exc}", stage=k) from exc
        if not max(elements) < added[0] < added[1] < added[2]:
            raise AssertionError(f"stage {k}: additions {added} out of order after max {max(elements)}")
        elements = _extend(elements, added, k)
        steps.append(Stage(k, added, elements, expected))
        _check_span(steps[-1])
    return ConstructionTrace(bspec, tuple(steps))


def build_a_thm13(b1: int, d: int, k_max: int) -> ConstructionTrace:
    bspec = BSpec.ap(b1, d)
    if k_max < 2:
        raise InvalidInput(f"k_max must be >= 2, got {k_max}")
    base = [b1 + 1, d, 2 * d]
    elements = _extend(tuple(build_a1(b1)), base, 2)
    try:
        steps = [Stage(2, elements, elements, expected_pattern_fact2(b1, d, 2))]
    except Overflow as exc:
        raise Overflow(str(exc), stage=2) from exc
    _check_span(steps[-1])
    for k in range(3, k_max + 1):
        try:
            a = checked((1 << (k - 1)) * d)
            expected = expected_pattern_fact2(b1, d, k)
        except Overflow as exc:
            raise Overflow(f"stage {k}: {exc}", stage=k) from exc
        elements = _extend(elements, [a], k)
        steps.append(Stage(k, (a,), elements, expected))
        _check_span(steps[-1])
    return ConstructionTrace(bspec, tuple(steps))


def truncate(trace: ConstructionTrace, k_last: int) -> ConstructionTrace:
    return ConstructionTrace(trace.bspec, tuple(s for s in trace.steps if s.k <= k_last))
