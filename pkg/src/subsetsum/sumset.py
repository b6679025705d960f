"""Bounded subset-sum sets as dense bit vectors.

A :class:`SumSet` stores ``P(S) ∩ [0, cap]`` for a finite family ``S`` as the
bits of a Python ``int``: bit ``v`` is set iff ``v`` is a subset sum.  Adding an
element is a single shift-and-OR, which CPython performs digit-parallel over
the whole window.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInput, ResourceLimit, checked

DEFAULT_MEM_BUDGET = 1 << 25
MEM_BUDGET_ENV = "SUBSETSUM_MEM_BUDGET"


def mem_budget() -> int:
    """Window budget in bits; ``SUBSETSUM_MEM_BUDGET`` overrides the default."""
    raw = os.environ.get(MEM_BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MEM_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise InvalidInput(f"{MEM_BUDGET_ENV}={raw!r} is not an integer") from exc
    if value < 1:
        raise InvalidInput(f"{MEM_BUDGET_ENV} must be positive")
    return value


def _set_bits(x: int, offset: int = 0) -> list[int]:
    # bin() is linear in the size of x; peeling low bits one at a time is not
    s = bin(x)[:1:-1]
    out = []
    i = s.find("1")
    while i != -1:
        out.append(i + offset)
        i = s.find("1", i + 1)
    return out


def _from_positions(positions: Iterable[int], hi: int) -> int:
    buf = bytearray(hi // 8 + 1)
    for p in positions:
        buf[p >> 3] |= 1 << (p & 7)
    return int.from_bytes(buf, "little")


def _mask(hi: int) -> int:
    return (1 << (hi + 1)) - 1


@dataclass(frozen=True)
class SumSet:
    cap: int
    bits: int = field(repr=False)

    def __post_init__(self):
        if self.cap < 0:
            raise InvalidInput("cap must be nonnegative")
        if not self.bits & 1:
            raise InvalidInput("0 must be a member of every sum set")
        if self.bits >> (self.cap + 1):
            raise InvalidInput("bits set beyond cap")

    def __contains__(self, v: int) -> bool:
        return 0 <= v <= self.cap and bool((self.bits >> v) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(_set_bits(self.bits))

    def members(self) -> list[int]:
        return _set_bits(self.bits)

    def max(self) -> int:
        return self.bits.bit_length() - 1

    def is_interval(self) -> bool:
        """True iff the members form ``[0, max]`` with no gaps."""
        return self.bits & (self.bits + 1) == 0

    def add(self, a: int) -> "SumSet":
        return add_element(self, a)

    def least_missing(self, lo: int = 0) -> int | None:
        """Smallest ``v >= lo`` in the window that is not a member."""
        inv = ~self.bits & _mask(self.cap)
        inv >>= lo
        if inv == 0:
            return None
        return lo + ((inv & -inv).bit_length() - 1)


@dataclass(frozen=True)
class HolePattern:
    """The set ``[0, span]`` minus ``holes``."""

    span: int
    holes: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "holes", tuple(self.holes))
        if self.span < 0:
            raise InvalidInput("span must be nonnegative")
        prev = 0
        for h in self.holes:
            if h <= prev:
                raise InvalidInput(f"holes must be strictly increasing and >= 1, got {self.holes}")
            prev = h
        if self.holes and self.holes[-1] > self.span:
            raise InvalidInput(f"hole {self.holes[-1]} exceeds span {self.span}")

    @classmethod
    def from_holes(cls, span: int, holes: Iterable[int]) -> "HolePattern":
        return cls(span, tuple(sorted(set(holes))))

    def __contains__(self, v: int) -> bool:
        return 0 <= v <= self.span and v not in self.holes

    def to_bits(self) -> int:
        return _mask(self.span) & ~_from_positions(self.holes, self.span)


@dataclass(frozen=True)
class MatchReport:
    span: int
    declared_holes_present: tuple[int, ...] = ()
    undeclared_missing: tuple[int, ...] = ()

    @property
    def equal(self) -> bool:
        return not self.declared_holes_present and not self.undeclared_missing

    def __bool__(self) -> bool:
        return self.equal


def empty_sumset(cap: int, budget: int | None = None) -> SumSet:
    checked(cap)
    budget = mem_budget() if budget is None else budget
    if cap + 1 > budget:
        raise ResourceLimit(f"window of {cap + 1} bits exceeds budget of {budget} bits")
    return SumSet(cap, 1)


def add_element(s: SumSet, a: int) -> SumSet:
    """Sum set of the family extended by ``a``; sums above ``s.cap`` are dropped."""
    if a < 1:
        raise InvalidInput(f"elements must be positive, got {a}")
    checked(a)
    if a > s.cap:
        return s
    return SumSet(s.cap, (s.bits | (s.bits << a)) & _mask(s.cap))


def subset_sums(elements: Sequence[int], cap: int, budget: int | None = None) -> SumSet:
    elements = list(elements)
    if len(set(elements)) != len(elements):
        raise InvalidInput("elements must be distinct")
    for a in elements:
        if a < 1:
            raise InvalidInput(f"elements must be positive, got {a}")
    s = empty_sumset(cap, budget)
    mask = _mask(cap)
    bits = s.bits
    for a in elements:
        checked(a)
        if a <= cap:
            bits = (bits | (bits << a)) & mask
    return SumSet(cap, bits)


def holes_in_range(s: SumSet, lo: int, hi: int) -> list[int]:
    if not 0 <= lo <= hi <= s.cap:
        raise InvalidInput(f"range [{lo}, {hi}] outside window [0, {s.cap}]")
    inv = (~s.bits >> lo) & _mask(hi - lo)
    return _set_bits(inv, lo)


def matches_pattern(s: SumSet, p: HolePattern) -> MatchReport:
    if p.span > s.cap:
        raise InvalidInput(f"pattern span {p.span} exceeds window cap {s.cap}")
    actual = s.bits & _mask(p.span)
    diff = actual ^ p.to_bits()
    return MatchReport(
        span=p.span,
        declared_holes_present=tuple(_set_bits(diff & actual)),
        undeclared_missing=tuple(_set_bits(diff & ~actual)),
    )

