"""Oracle checks for constructions, windowed complement checks and Lemma 2.1."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .construct import ConstructionTrace, expected_pattern_fact1
from .errors import InvalidInput
from .search import SearchNode, admissible_extensions
from .sequences import BSpec
from .sumset import HolePattern, MatchReport, _set_bits, matches_pattern, mem_budget, subset_sums

EQUAL = "equal"
MISMATCH = "mismatch"
SKIPPED = "skipped"
PENDING_ONLY = "equal_except_pending"


@dataclass(frozen=True)
class StageReport:
    k: int
    added: tuple[int, ...]
    size: int
    span: int
    expected_holes: tuple[int, ...]
    status: str
    match: MatchReport | None = None
    notice: str | None = None

    @property
    def verified(self) -> bool:
        return self.status == EQUAL

    def to_dict(self) -> dict:
        mismatches = []
        if self.match is not None:
            mismatches += [{"value": v, "kind": "declared_hole_present"}
                           for v in self.match.declared_holes_present]
            mismatches += [{"value": v, "kind": "undeclared_missing"}
                           for v in self.match.undeclared_missing]
            mismatches.sort(key=lambda m: m["value"])
        out = {
            "k": self.k,
            "added": list(self.added),
            "size": self.size,
            "span": self.span,
            "expected_holes": list(self.expected_holes),
            "verified": self.verified,
            "mismatches": mismatches,
        }
        if self.notice:
            out["notice"] = self.notice
        return out


def verify_stage(elements: Sequence[int], expected: HolePattern, k: int = 0,
                 added: Sequence[int] = (), budget: int | None = None) -> StageReport:
    budget = mem_budget() if budget is None else budget
    common = dict(k=k, added=tuple(added), size=len(elements), span=expected.span,
                  expected_holes=expected.holes)
    if expected.span + 1 > budget:
        return StageReport(**common, status=SKIPPED,
                           notice=f"window of {expected.span + 1} bits exceeds budget {budget}")
    s = subset_sums(elements, expected.span, budget)
    rep = matches_pattern(s, expected)
    return StageReport(**common, status=EQUAL if rep.equal else MISMATCH, match=rep)


def verify_trace(trace: ConstructionTrace, budget: int | None = None) -> list[StageReport]:
    """Recompute P(A_k) from scratch for every stage and compare with the expected pattern.

    Stages whose window exceeds the budget are reported as skipped.
    """
    return [verify_stage(st.elements, st.expected, st.k, st.added, budget) for st in trace.steps]


def last_verified_stage(reports: Sequence[StageReport]) -> int | None:
    last = None
    for r in reports:
        if not r.verified:
            break
        last = r.k
    return last


class WindowBeyondSupport(InvalidInput):
    pass


@dataclass(frozen=True)
class ComplementReport:
    window: int
    status: str
    stage: int | None = None
    exact_upto: int | None = None
    b_in_window: tuple[int, ...] = ()
    b_represented: tuple[int, ...] = ()
    missing: tuple[int, ...] = ()
    pending: tuple[int, ...] = ()
    first_disagreement: int | None = None
    exact_below_cutoff: bool = True

    @property
    def equal(self) -> bool:
        return self.status == EQUAL

    def to_dict(self) -> dict:
        return {
            "window": self.window,
            "status": self.status,
            "stage": self.stage,
            "exact_upto": self.exact_upto,
            "exact_below_cutoff": self.exact_below_cutoff,
            "b_in_window": list(self.b_in_window),
            "b_represented": list(self.b_represented),
            "missing": list(self.missing),
            "pending": list(self.pending),
            "first_disagreement": self.first_disagreement,
        }


def _locate_stage(total: int, bspec: BSpec) -> tuple[int | None, set[int], int | None]:
    """Match an element sum to a construction stage.

    Returns (stage, terminal holes filled by later stages, cutoff below which
    P(A_k) already agrees with P(A)).
    """
    if bspec.family == "thm11":
        k = 3
        while True:
            b = bspec.terms(k)
            span = b[-1] + b[-2]
            if span == total:
                pending = set(expected_pattern_fact1(b, k).holes) - set(b)
                return k, pending, b[k - 1] + 2 * b[k - 3] - 1
            if span > total:
                return None, set(), None
            k += 1
    if bspec.family == "ap":
        k = 2
        while True:
            span = 2 * bspec.b1 + ((1 << k) - 1) * bspec.d
            if span == total:
                return k, set(), (1 << (k - 1)) * bspec.d
            if span > total:
                return None, set(), None
            k += 1
    return None, set(), None


def verify_complement(elements: Sequence[int], bspec: BSpec, m: int,
                      budget: int | None = None) -> ComplementReport:
    """Compare ``P(elements) ∩ [0, m]`` with ``[0, m] \\ B``.

    Missing values that are terminal holes of the matching construction stage
    are reported as pending (later stages fill them) rather than as errors.
    """
    elements = list(elements)
    for x, y in zip(elements, elements[1:]):
        if y <= x:
            raise InvalidInput("elements must be strictly increasing")
    if elements and elements[0] < 1:
        raise InvalidInput("elements must be positive")
    total = sum(elements)
    if not 0 <= m <= total:
        raise WindowBeyondSupport(f"window {m} exceeds element sum {total}")
    s = subset_sums(elements, m, budget)
    b_terms = bspec.terms_upto(m)
    bset = 0
    for b in b_terms:
        bset |= 1 << b
    mask = (1 << (m + 1)) - 1
    represented_b = _set_bits(s.bits & bset)
    missing = _set_bits(~s.bits & ~bset & mask)

    k, pending_pool, cutoff = _locate_stage(total, bspec)
    pending = [v for v in missing if v in pending_pool]
    errors = sorted(represented_b + [v for v in missing if v not in pending_pool])
    disagreements = sorted(represented_b + missing)
    if errors:
        status = MISMATCH
    elif pending:
        status = PENDING_ONLY
    else:
        status = EQUAL
    exact_upto = min(m, cutoff) if cutoff is not None else m
    return ComplementReport(
        window=m,
        status=status,
        stage=k,
        exact_upto=exact_upto,
        b_in_window=tuple(b_terms),
        b_represented=tuple(represented_b),
        missing=tuple(missing),
        pending=tuple(pending),
        first_disagreement=disagreements[0] if disagreements else None,
        exact_below_cutoff=not disagreements or disagreements[0] > exact_upto,
    )


@dataclass(frozen=True)
class Lemma21Report:
    b1: int
    b2: int
    next_candidates: tuple[int, ...]
    next_rejected: tuple[tuple[int, int], ...]
    forced_next: int | None
    interval_with_one_hole: bool
    range_after: tuple[int, int]
    admissible_after: tuple[int, ...]
    beyond_range_uncoverable: int
    second_formula: dict[int, bool] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        lo, hi = self.range_after
        return (
            self.forced_next == self.b1 + 1
            and self.interval_with_one_hole
            and all(lo <= a <= hi for a in self.admissible_after)
            and self.beyond_range_uncoverable == 2 * self.b1 + 1
            and all(self.second_formula.values())
        )

    def to_dict(self) -> dict:
        return {
            "b1": self.b1,
            "b2": self.b2,
            "forced_next": self.forced_next,
            "next_rejected": [list(r) for r in self.next_rejected],
            "interval_with_one_hole": self.interval_with_one_hole,
            "range_after": list(self.range_after),
            "admissible_after": list(self.admissible_after),
            "holds": self.holds,
        }


def check_lemma21(a1_elements: Sequence[int], b1: int, b2: int) -> Lemma21Report:
    """Exhaustively confirm the forced extension after a base with ``P = [0, b1 - 1]``.

    Candidates for the next two elements are enumerated with B known up to
    ``b2``; anything above the least unrepresented value is impossible since
    every later element is larger.
    """
    a1 = sorted(a1_elements)
    if b1 <= 1:
        raise InvalidInput(f"b1 must exceed 1, got {b1}")
    if b2 < 2 * b1 + 2:
        raise InvalidInput(f"b2={b2} < 2b1+2={2 * b1 + 2}")
    if sum(a1) != b1 - 1 or not subset_sums(a1, b1 - 1).is_interval():
        raise InvalidInput(f"P({a1}) is not [0, {b1 - 1}]")
    known_b = [b1, b2]
    first = admissible_extensions(SearchNode.of(a1, b2), known_b, b2)
    forced = first.candidates[0] if len(first.candidates) == 1 else None

    grown = a1 + [b1 + 1]
    p = subset_sums(grown, 2 * b1)
    one_hole = matches_pattern(p, HolePattern(2 * b1, (b1,))).equal

    second = admissible_extensions(SearchNode.of(grown, b2), known_b, b2)
    # for every a in the range, P(A_1 ∪ {b1+1, a}) = [0, a + 2b1] \ {b1, a + b1}
    formula = {}
    for a in range(b1 + 2, 2 * b1 + 2):
        s = subset_sums(grown + [a], a + 2 * b1)
        formula[a] = matches_pattern(s, HolePattern(a + 2 * b1, (b1, a + b1))).equal
    return Lemma21Report(
        b1=b1,
        b2=b2,
        next_candidates=first.candidates,
        next_rejected=first.rejected,
        forced_next=forced,
        interval_with_one_hole=one_hole,
        range_after=(b1 + 2, 2 * b1 + 1),
        admissible_after=second.candidates,
        beyond_range_uncoverable=second.target,
        second_formula=formula,
    )
