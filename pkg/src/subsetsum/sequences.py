"""B-sequence families and hypothesis classifiers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidInput, checked

THM_C_B1_SMALL = frozenset({4, 7, 8})
THM_D_B1 = frozenset({3, 5, 6, 9, 10})


def admissible_b1(b1: int) -> bool:
    """``b1 ∈ {4, 7, 8} ∪ [11, ∞)``."""
    return b1 in THM_C_B1_SMALL or b1 >= 11


@dataclass(frozen=True)
class BSpec:
    family: str
    b1: int | None = None
    d: int | None = None
    prefix: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        if self.family == "thm11":
            if self.b1 is None or self.b1 < 11:
                raise InvalidInput(f"thm11 family needs b1 >= 11, got {self.b1}")
        elif self.family == "ap":
            if self.b1 is None or self.d is None:
                raise InvalidInput("ap family needs b1 and d")
            _check_ap(self.b1, self.d)
        elif self.family == "explicit":
            _check_increasing(self.prefix)
            if not self.prefix:
                raise InvalidInput("explicit family needs a nonempty prefix")
        else:
            raise InvalidInput(f"unknown family {self.family!r}")

    @classmethod
    def thm11(cls, b1: int) -> "BSpec":
        return cls("thm11", b1=b1)

    @classmethod
    def ap(cls, b1: int, d: int) -> "BSpec":
        return cls("ap", b1=b1, d=d)

    @classmethod
    def explicit(cls, prefix: Sequence[int]) -> "BSpec":
        return cls("explicit", prefix=tuple(prefix))

    def terms_upto(self, m: int) -> list[int]:
        """All terms ``<= m``.

        For an explicit prefix only the listed terms are known; anything past
        the last term is treated as absent from B.
        """
        if self.family == "explicit":
            return [b for b in self.prefix if b <= m]
        out: list[int] = []
        n = 1
        while True:
            terms = self.terms(n)
            if terms[-1] > m:
                return out
            out = terms
            n += 1

    def terms(self, n: int) -> list[int]:
        if self.family == "thm11":
            return gen_b_thm11(self.b1, n)
        if self.family == "ap":
            return gen_b_ap(self.b1, self.d, n)
        return list(self.prefix[:n])


def _check_increasing(prefix: Sequence[int]) -> None:
    prev = 0
    for b in prefix:
        if b <= prev:
            raise InvalidInput(f"B must be strictly increasing and positive, got {list(prefix)}")
        prev = b


def _check_ap(b1: int, d: int) -> None:
    if not admissible_b1(b1):
        raise InvalidInput(f"b1={b1} not in {{4,7,8}} ∪ [11, ∞)")
    if not b1 + 2 <= d <= 2 * b1 + 1:
        raise InvalidInput(f"d={d} outside [b1+2, 2b1+1] = [{b1 + 2}, {2 * b1 + 1}]")


def gen_b_thm11(b1: int, n: int, *, bigint: bool = False) -> list[int]:
    """``b_2 = 3b_1 + 5``, ``b_3 = 3b_2 + 2``, then ``b_{k+1} = 3b_k + 4b_{k-1}``.

    With ``bigint=True`` the 64-bit overflow check is skipped.
    """
    if b1 < 11:
        raise InvalidInput(f"b1 must be >= 11, got {b1}")
    if n < 1:
        raise InvalidInput("n must be >= 1")
    check = (lambda v: v) if bigint else checked
    b = [check(b1)]
    if n >= 2:
        b.append(check(3 * b[0] + 5))
    if n >= 3:
        b.append(check(3 * b[1] + 2))
    while len(b) < n:
        b.append(check(3 * b[-1] + 4 * b[-2]))
    return b


def gen_b_ap(b1: int, d: int, n: int, *, bigint: bool = False) -> list[int]:
    _check_ap(b1, d)
    if n < 1:
        raise InvalidInput("n must be >= 1")
    check = (lambda v: v) if bigint else checked
    return [check(b1 + i * d) for i in range(n)]


# classification

@dataclass(frozen=True)
class Flag:
    """A tri-state verdict: ``value`` is None when the prefix is too short to decide.

    ``prefix_limited`` marks verdicts that quantify over all n and were only
    checked on the supplied terms.
    """

    value: bool | None
    witness: str
    prefix_limited: bool = False

    def to_dict(self) -> dict:
        return {"value": self.value, "witness": self.witness, "prefix_limited": self.prefix_limited}


@dataclass(frozen=True)
class Problem1Report:
    d: tuple[int, ...]
    equal_indices: tuple[int, ...]
    m: int | None
    others_exceed: bool
    prefix_limited: bool = True
    ambiguous_m1: bool = False
    witness: str = ""

    def to_dict(self) -> dict:
        return {
            "d": list(self.d),
            "equal_indices": list(self.equal_indices),
            "m": self.m,
            "others_exceed": self.others_exceed,
            "prefix_limited": self.prefix_limited,
            "ambiguous_m1": self.ambiguous_m1,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class BClassification:
    prefix: tuple[int, ...]
    satisfies_thmC: Flag
    satisfies_thmE: Flag
    matches_thmD_case: Flag
    matches_thm12_case: Flag
    problem1: Problem1Report = field(repr=False)

    @property
    def problem1_m(self) -> int | None:
        return self.problem1.m

    def to_dict(self) -> dict:
        return {
            "prefix": list(self.prefix),
            "satisfies_thmC": self.satisfies_thmC.to_dict(),
            "satisfies_thmE": self.satisfies_thmE.to_dict(),
            "matches_thmD_case": self.matches_thmD_case.to_dict(),
            "matches_thm12_case": self.matches_thm12_case.to_dict(),
            "problem1": self.problem1.to_dict(),
        }


def _for_all(checks: list[tuple[bool, str]], needed: int, have: int) -> Flag:
    """Combine term-wise checks of a condition quantified over all n."""
    for ok, text in checks:
        if not ok:
            return Flag(False, f"fails: {text}")
    if have < needed:
        return Flag(None, f"needs b_{needed}, prefix has {have} terms")
    return Flag(True, "; ".join(t for _, t in checks) or "vacuous", prefix_limited=True)


def _b1_flag(b1: int) -> tuple[bool, str]:
    return admissible_b1(b1), f"b1={b1} {'in' if admissible_b1(b1) else 'not in'} {{4,7,8}}∪[11,∞)"


def _thm_c(b: Sequence[int]) -> Flag:
    checks = [_b1_flag(b[0])]
    for n in range(1, len(b)):
        rhs = 3 * b[n - 1] + 5
        checks.append((b[n] >= rhs, f"b_{n + 1} >= 3b_{n}+5 ({b[n]} vs {rhs})"))
    return _for_all(checks, 2, len(b))


def _thm_e(b: Sequence[int]) -> Flag:
    checks = [_b1_flag(b[0])]
    if len(b) >= 2:
        rhs = 3 * b[0] + 5
        checks.append((b[1] >= rhs, f"b_2 >= 3b_1+5 ({b[1]} vs {rhs})"))
    if len(b) >= 3:
        rhs = 3 * b[1] + 3
        checks.append((b[2] >= rhs, f"b_3 >= 3b_2+3 ({b[2]} vs {rhs})"))
    # b_{n+1} > 3b_n - b_{n-2}, n >= 3 (1-based)
    for n in range(3, len(b)):
        rhs = 3 * b[n - 1] - b[n - 3]
        checks.append((b[n] > rhs, f"b_{n + 1} > 3b_{n}-b_{n - 2} ({b[n]} vs {rhs})"))
    return _for_all(checks, 4, len(b))


def _thm_d(b: Sequence[int]) -> Flag:
    b1 = b[0]
    if b1 in THM_D_B1:
        return Flag(True, f"b1={b1} in {{3,5,6,9,10}}")
    if len(b) < 2:
        # the remaining cases all constrain b_2
        return Flag(None, "b_2 needed to decide the b_2-cases")
    b2 = b[1]
    if b2 == 3 * b1 + 4:
        return Flag(True, f"b_2={b2} = 3b_1+4")
    if (b1, b2) == (1, 9):
        return Flag(True, "b_1=1, b_2=9")
    if (b1, b2) == (2, 15):
        return Flag(True, "b_1=2, b_2=15")
    return Flag(False, "no case applies")


def _thm_12(b: Sequence[int]) -> Flag:
    b1 = b[0]
    if b1 < 3:
        return Flag(False, f"b1={b1} < 3")
    if len(b) < 2:
        return Flag(None, "b_2 needed")
    b2 = b[1]
    if b2 == 3 * b1 + 3:
        return Flag(True, f"b_2={b2} = 3b_1+3")
    if b2 == 3 * b1 + 2:
        return Flag(True, f"b_2={b2} = 3b_1+2")
    return Flag(False, f"b_2={b2} is neither 3b_1+3 nor 3b_1+2")


def problem1_d(b: Sequence[int]) -> list[int]:
    """Comparison terms ``d_1..d_len(b)``: 10, 3b_1+4, 3b_2+2, then 3b_n - b_{n-2}."""
    d: list[int] = []
    for n in range(1, len(b) + 1):
        if n == 1:
            d.append(10)
        elif n == 2:
            d.append(3 * b[0] + 4)
        elif n == 3:
            d.append(3 * b[1] + 2)
        else:
            d.append(3 * b[n - 2] - b[n - 4])
    return d


def _problem1(b: Sequence[int]) -> Problem1Report:
    d = problem1_d(b)
    equal = tuple(i + 1 for i in range(len(b)) if b[i] == d[i])
    below = [i + 1 for i in range(len(b)) if b[i] < d[i]]
    m = None
    others = False
    if len(equal) == 1 and equal[0] >= 3 and not below:
        m = equal[0]
        others = True
    if below:
        witness = f"b_{below[0]}={b[below[0] - 1]} < d_{below[0]}={d[below[0] - 1]}"
    elif m is not None:
        witness = f"b_{m}=d_{m}={d[m - 1]}, b_n > d_n for the other {len(b) - 1} terms"
    elif not equal:
        witness = "b_n > d_n for every term; no equality index"
    else:
        witness = f"equality at {list(equal)}"
    return Problem1Report(
        d=tuple(d),
        equal_indices=equal,
        m=m,
        others_exceed=others,
        ambiguous_m1=1 in equal,
        witness=witness,
    )


def classify_b(prefix: Sequence[int]) -> BClassification:
    b = list(prefix)
    if not b:
        raise InvalidInput("prefix must have at least one term")
    _check_increasing(b)
    return BClassification(
        prefix=tuple(b),
        satisfies_thmC=_thm_c(b),
        satisfies_thmE=_thm_e(b),
        matches_thmD_case=_thm_d(b),
        matches_thm12_case=_thm_12(b),
        problem1=_problem1(b),
    )
