"""Traced Euclidean algorithm with the ``y == 1`` early exit, plus Fibonacci
and Bezout helpers.

Iteration counting: every invocation of the recursion is one iteration,
including the final one that returns at ``y == 0`` or ``y == 1``.
"""

from __future__ import annotations

from dataclasses import dataclass


class DomainError(ValueError):
    """Raised for inputs outside the algorithm's domain, e.g. ``gcd(0, 0)``."""


@dataclass(frozen=True)
class EuclidStep:
    x: int
    y: int
    q: int | None = None
    r: int | None = None

    @property
    def terminal(self) -> bool:
        return self.q is None


@dataclass(frozen=True)
class EuclidTrace:
    steps: tuple[EuclidStep, ...]
    gcd_value: int
    # True when the caller passed the operands in ascending order.
    swapped: bool = False

    @property
    def m(self) -> int:
        return len(self.steps)

    @property
    def x(self) -> int:
        return self.steps[0].x

    @property
    def y(self) -> int:
        return self.steps[0].y


@dataclass(frozen=True)
class BezoutCertificate:
    g: int
    u: int
    v: int


def _check_operands(x: int, y: int) -> None:
    if isinstance(x, bool) or isinstance(y, bool):
        raise TypeError("operands must be int, not bool")
    if x < 0 or y < 0:
        raise DomainError(f"operands must be non-negative, got ({x}, {y})")
    if x == 0 and y == 0:
        raise DomainError("gcd(0,0) undefined")


def normalize(x: int, y: int) -> tuple[int, int, bool]:
    """Order the operands so that ``x >= y``; report whether they were swapped.

    Equal operands are returned unchanged; the recursion then spends one
    counted step reducing ``(x, x)`` to ``(x, 0)`` (or exits at once for
    ``x == 1``).
    """
    _check_operands(x, y)
    if x < y:
        return y, x, True
    return x, y, False


def trace(x: int, y: int) -> EuclidTrace:
    x, y, swapped = normalize(x, y)
    steps: list[EuclidStep] = []
    while True:
        if y == 0:
            steps.append(EuclidStep(x, y))
            return EuclidTrace(tuple(steps), x, swapped)
        if y == 1:
            steps.append(EuclidStep(x, y))
            return EuclidTrace(tuple(steps), 1, swapped)
        q, r = divmod(x, y)
        steps.append(EuclidStep(x, y, q, r))
        x, y = y, r


def gcd(x: int, y: int) -> int:
    x, y, _ = normalize(x, y)
    while True:
        if y == 0:
            return x
        if y == 1:
            return 1
        x, y = y, x % y


def iteration_count(x: int, y: int) -> int:
    """Number of iterations ``trace(x, y)`` performs, without building the trace."""
    x, y, _ = normalize(x, y)
    m = 1
    while y > 1:
        x, y = y, x % y
        m += 1
    return m


def extended_gcd(x: int, y: int) -> BezoutCertificate:
    """Bezout coefficients by back-substitution through the division steps.

    The returned ``u`` and ``v`` refer to the arguments in the order given,
    so ``u*x + v*y == g`` always holds for the caller's ``x`` and ``y``.
    """
    t = trace(x, y)
    last = t.steps[-1]
    # Terminal step: y == 0 gives g = 1*x + 0*y, y == 1 gives 1 = 0*x + 1*y.
    u, v = (1, 0) if last.y == 0 else (0, 1)
    for step in reversed(t.steps[:-1]):
        # g = u*y_i + v*r_i and r_i = x_i - q_i*y_i
        u, v = v, u - step.q * v
    if t.swapped:
        u, v = v, u
    return BezoutCertificate(t.gcd_value, u, v)


def _fib_pair(n: int) -> tuple[int, int]:
    # fast doubling: returns (F(n), F(n+1))
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    """Fibonacci number with ``F_0 = 0`` and ``F_1 = F_2 = 1``."""
    if n < 0:
        raise DomainError(f"fib index must be non-negative, got {n}")
    return _fib_pair(n)[0]


def fibonacci_pair(k: int) -> tuple[int, int]:
    """The worst-case input ``(F_{k+2}, F_{k+1})`` that needs exactly ``k`` iterations."""
    if k < 1:
        raise DomainError(f"fibonacci_pair needs k >= 1, got {k}")
    lo, hi = _fib_pair(k + 1)
    return hi, lo
