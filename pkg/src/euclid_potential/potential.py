"""Potential series over a Euclid trace and exact checks of the runtime bounds.

Two potentials are tracked per step: the additive one ``x_i + y_i`` and the
golden one ``x_i + y_i/phi``, stored as ``(x_i - y_i) + y_i*phi``. Every
verdict is an integer or Z[phi] comparison; floats only fill display fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .euclid import EuclidTrace, fib, trace
from .golden import PHI_FLOAT, GoldenInt, golden_phi_pow

_LOG_THREE_HALVES = math.log(1.5)
_LOG_PHI = math.log(PHI_FLOAT)


class StepCheck(NamedTuple):
    """Outcome of one contraction check between step ``i - 1`` and step ``i``."""

    i: int
    holds: bool
    margin: int | GoldenInt
    equal: bool


@dataclass(frozen=True)
class LameVerdict:
    holds: bool
    # False when the trace starts with y == 0 or x == y; the check is then vacuous.
    applicable: bool = True

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class BoundReport:
    x: int
    y: int
    m: int
    thm1_exact_holds: bool
    thm1_float_bound: float
    thm2_exact_holds: bool
    thm2_float_bound: float
    cor1_holds: bool
    cor2_holds: bool
    lame: LameVerdict
    additive: tuple[int, ...] = field(repr=False)
    golden: tuple[GoldenInt, ...] = field(repr=False)
    lemma1_checks: tuple[StepCheck, ...] = field(repr=False)
    lemma2_checks: tuple[StepCheck, ...] = field(repr=False)

    @property
    def lemma1_per_step(self) -> list[bool]:
        return [c.holds for c in self.lemma1_checks]

    @property
    def lemma2_per_step(self) -> list[bool]:
        return [c.holds for c in self.lemma2_checks]

    @property
    def lemma2_equality_steps(self) -> set[int]:
        return {c.i for c in self.lemma2_checks if c.equal}

    @property
    def lame_holds(self) -> bool:
        return self.lame.holds

    @property
    def all_pass(self) -> bool:
        return (
            self.thm1_exact_holds
            and self.thm2_exact_holds
            and self.cor1_holds
            and self.cor2_holds
            and self.lame.holds
            and all(self.lemma1_per_step)
            and all(self.lemma2_per_step)
        )


def additive_series(t: EuclidTrace) -> list[int]:
    return [s.x + s.y for s in t.steps]


def golden_series(t: EuclidTrace) -> list[GoldenInt]:
    return [GoldenInt(s.x - s.y, s.y) for s in t.steps]


def check_lemma_additive(s: list[int]) -> list[StepCheck]:
    """``s_i <= 2/3 * s_{i-1}`` checked as ``3*s_i <= 2*s_{i-1}``.

    The margin is ``2*s_{i-1} - 3*s_i``; on a valid trace it is at least 1.
    """
    out = []
    for i in range(1, len(s)):
        margin = 2 * s[i - 1] - 3 * s[i]
        out.append(StepCheck(i + 1, margin >= 0, margin, margin == 0))
    return out


def check_lemma_golden(s: list[GoldenInt], t: EuclidTrace | None = None) -> list[StepCheck]:
    """``s_i <= s_{i-1}/phi`` checked as ``phi*s_i <= s_{i-1}`` in Z[phi].

    The margin is ``s_{i-1} - phi*s_i``. Equality happens exactly at steps
    whose quotient is 1.
    """
    if t is not None and len(s) != t.m:
        raise ValueError(f"series of length {len(s)} does not match trace with m={t.m}")
    out = []
    for i in range(1, len(s)):
        margin = s[i - 1] - s[i].mul_phi()
        sgn = margin.sign()
        out.append(StepCheck(i + 1, sgn >= 0, margin, sgn == 0))
    return out


def check_cor1(additive: list[int], golden: list[GoldenInt]) -> bool:
    one = GoldenInt(1, 0)
    return all(v >= 1 for v in additive) and all(g.cmp(one) >= 0 for g in golden)


def check_cor2(s: list[int]) -> bool:
    """``s_i <= s_1 * (2/3)**(i-1)`` for every i, as ``3**(i-1)*s_i <= 2**(i-1)*s_1``."""
    if not s:
        return True
    s1 = s[0]
    p3 = p2 = 1
    for v in s:
        if p3 * v > p2 * s1:
            return False
        p3 *= 3
        p2 *= 2
    return True


def thm1_bound(x: int, y: int) -> float:
    return math.log(x + y) / _LOG_THREE_HALVES + 1


def thm2_bound(x: int, y: int) -> float:
    # log(phi*x + y) split up so huge operands never become floats
    return (math.log(x) + math.log(PHI_FLOAT + y / x)) / _LOG_PHI


def check_thm1(x: int, y: int, m: int) -> tuple[bool, float]:
    """``m <= log_1.5(x + y) + 1``, decided as ``3**(m-1) <= 2**(m-1) * (x + y)``."""
    return 3 ** (m - 1) <= 2 ** (m - 1) * (x + y), thm1_bound(x, y)


def check_thm2(x: int, y: int, m: int) -> tuple[bool, float]:
    """``m <= log_phi(phi*x + y)``, decided as ``phi**m <= y + x*phi`` in Z[phi]."""
    return golden_phi_pow(m).cmp(GoldenInt(y, x)) <= 0, thm2_bound(x, y)


def lame_check(t: EuclidTrace) -> LameVerdict:
    """An m-iteration run needs ``x >= F_{m+2}`` and ``y >= F_{m+1}``."""
    if t.y == 0 or t.x == t.y:
        return LameVerdict(True, applicable=False)
    return LameVerdict(t.x >= fib(t.m + 2) and t.y >= fib(t.m + 1))


def analyze(x: int, y: int) -> BoundReport:
    t = trace(x, y)
    x, y = t.x, t.y
    add = additive_series(t)
    gold = golden_series(t)
    thm1, thm1_f = check_thm1(x, y, t.m)
    thm2, thm2_f = check_thm2(x, y, t.m)
    return BoundReport(
        x=x,
        y=y,
        m=t.m,
        thm1_exact_holds=thm1,
        thm1_float_bound=thm1_f,
        thm2_exact_holds=thm2,
        thm2_float_bound=thm2_f,
        cor1_holds=check_cor1(add, gold),
        cor2_holds=check_cor2(add),
        lame=lame_check(t),
        additive=tuple(add),
        golden=tuple(gold),
        lemma1_checks=tuple(check_lemma_additive(add)),
        lemma2_checks=tuple(check_lemma_golden(gold, t)),
    )
