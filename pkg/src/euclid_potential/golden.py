"""Exact arithmetic in Z[phi], the numbers ``a + b*phi`` with integer a, b.

phi is the positive root of ``t**2 - t - 1``, so ``phi**2 == phi + 1`` and
``1/phi == phi - 1``. Ordering is decided with integer arithmetic only.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import total_ordering

from .euclid import fib

PHI_FLOAT = (1 + math.sqrt(5)) / 2

# Coefficients beyond this lose integer precision once converted to float.
_FLOAT_EXACT_LIMIT = 2**53


class ApproximationWarning(UserWarning):
    """The float value of a GoldenInt is not trustworthy."""


def sign_parts(a: int, b: int) -> int:
    """Sign of ``a + b*phi`` for integers a and b."""
    if a >= 0 and b >= 0:
        return 1 if (a or b) else 0
    if a <= 0 and b <= 0:
        return -1
    if b > 0:
        # a < 0 < b: compare r = |a|/b against phi; r < phi iff r*r - r - 1 < 0
        return 1 if a * a + a * b - b * b < 0 else -1
    # b < 0 < a: positive iff a/|b| > phi
    return 1 if a * a + a * b - b * b > 0 else -1


@total_ordering
@dataclass(frozen=True)
class GoldenInt:
    a: int
    b: int

    def __add__(self, other: GoldenInt) -> GoldenInt:
        if not isinstance(other, GoldenInt):
            return NotImplemented
        return GoldenInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: GoldenInt) -> GoldenInt:
        if not isinstance(other, GoldenInt):
            return NotImplemented
        return GoldenInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> GoldenInt:
        return GoldenInt(-self.a, -self.b)

    def mul_phi(self) -> GoldenInt:
        # phi * (a + b*phi) = b + (a + b)*phi
        return GoldenInt(self.b, self.a + self.b)

    def sign(self) -> int:
        return sign_parts(self.a, self.b)

    def cmp(self, other: GoldenInt) -> int:
        return sign_parts(self.a - other.a, self.b - other.b)

    def __lt__(self, other: GoldenInt) -> bool:
        if not isinstance(other, GoldenInt):
            return NotImplemented
        return self.cmp(other) < 0

    def __float__(self) -> float:
        return golden_to_float(self)

    def __str__(self) -> str:
        return f"{self.a}+{self.b}·φ" if self.b >= 0 else f"{self.a}-{-self.b}·φ"


ZERO = GoldenInt(0, 0)
ONE = GoldenInt(1, 0)
PHI = GoldenInt(0, 1)
INV_PHI = GoldenInt(-1, 1)


def golden_make(a: int, b: int) -> GoldenInt:
    return GoldenInt(a, b)


def golden_add(g1: GoldenInt, g2: GoldenInt) -> GoldenInt:
    return g1 + g2


def golden_sub(g1: GoldenInt, g2: GoldenInt) -> GoldenInt:
    return g1 - g2


def golden_mul_phi(g: GoldenInt) -> GoldenInt:
    return g.mul_phi()


def golden_sign(g: GoldenInt) -> int:
    return g.sign()


def golden_cmp(g1: GoldenInt, g2: GoldenInt) -> int:
    """-1, 0 or 1 as ``g1`` is less than, equal to or greater than ``g2``."""
    return g1.cmp(g2)


def golden_phi_pow(m: int) -> GoldenInt:
    """``phi**m`` as ``F_{m-1} + F_m*phi``."""
    if m < 1:
        raise ValueError(f"golden_phi_pow needs m >= 1, got {m}")
    return GoldenInt(fib(m - 1), fib(m))


def golden_to_float(g: GoldenInt) -> float:
    """Approximate value for display. Never used to decide a comparison.

    Warns with :class:`ApproximationWarning` when the coefficients are too
    large for the float result to be reliable.
    """
    if abs(g.a) > _FLOAT_EXACT_LIMIT or abs(g.b) > _FLOAT_EXACT_LIMIT:
        warnings.warn(
            f"float value of {g.a}+{g.b}·φ is approximate", ApproximationWarning, stacklevel=2
        )
    try:
        return g.a + g.b * PHI_FLOAT
    except OverflowError:
        return math.copysign(math.inf, g.sign())
