"""Exhaustive verification over all pairs ``0 <= y < x <= x_max``, the
Fibonacci tightness family, and CSV output.

The scan uses a fused integer kernel instead of calling ``analyze`` per pair;
``tests/test_harness.py`` checks the two agree on every pair up to 300.
"""

from __future__ import annotations

import csv
import io
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

from .euclid import DomainError, fib, fibonacci_pair, iteration_count
from .golden import GoldenInt, golden_phi_pow, sign_parts
from .potential import thm1_bound, thm2_bound

HISTOGRAM_CAP = 200

CHECKS = (
    "thm1",
    "thm2",
    "lemma1",
    "lemma2",
    "lemma2_equality",
    "cor1",
    "cor2",
    "lame",
)

TIGHTNESS_HEADER = ("k", "x", "y", "m", "thm2_bound", "gap")
SUMMARY_HEADER = ("x_max", "pairs", "violations", "max_m", "witness_x", "witness_y")


@dataclass
class ScanSummary:
    x_max: int
    pairs_checked: int = 0
    max_m: int = 0
    max_m_witness: tuple[int, int] | None = None
    tightness_thm1_max_gap: float = -math.inf
    tightness_thm2_max_gap: float = -math.inf
    tightness_thm1_min_gap: float = math.inf
    tightness_thm2_min_gap: float = math.inf
    histogram_m: dict[int, int] = field(default_factory=dict)
    violations_by_check: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    # first few failing pairs per check, for diagnostics
    violation_examples: dict[str, list[tuple[int, int]]] = field(default_factory=dict)
    # pairs with x == F_{m+2} and y == F_{m+1}
    lame_equality_pairs: list[tuple[int, int]] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(self.violations_by_check.values())

    def merge(self, other: ScanSummary) -> ScanSummary:
        """Combine two partial summaries; associative and commutative."""
        if other.x_max != self.x_max:
            raise ValueError("cannot merge scans over different ranges")
        out = ScanSummary(self.x_max)
        out.pairs_checked = self.pairs_checked + other.pairs_checked
        cands = [(s.max_m, s.max_m_witness) for s in (self, other) if s.max_m_witness]
        if cands:
            # deepest pair wins; ties go to the lexicographically smallest pair
            out.max_m, out.max_m_witness = min(cands, key=lambda c: (-c[0], c[1]))
        out.tightness_thm1_max_gap = max(self.tightness_thm1_max_gap, other.tightness_thm1_max_gap)
        out.tightness_thm2_max_gap = max(self.tightness_thm2_max_gap, other.tightness_thm2_max_gap)
        out.tightness_thm1_min_gap = min(self.tightness_thm1_min_gap, other.tightness_thm1_min_gap)
        out.tightness_thm2_min_gap = min(self.tightness_thm2_min_gap, other.tightness_thm2_min_gap)
        out.histogram_m = dict(sorted((Counter(self.histogram_m) + Counter(other.histogram_m)).items()))
        out.violations_by_check = {
            c: self.violations_by_check[c] + other.violations_by_check[c] for c in CHECKS
        }
        for c in CHECKS:
            ex = sorted(self.violation_examples.get(c, []) + other.violation_examples.get(c, []))
            if ex:
                out.violation_examples[c] = ex[:10]
        out.lame_equality_pairs = sorted(self.lame_equality_pairs + other.lame_equality_pairs)
        return out


@dataclass(frozen=True)
class TightnessRecord:
    k: int
    x: int
    y: int
    m: int
    thm2_float_bound: float
    gap: float
    # y + x*phi == phi**(k+2), checked in Z[phi]
    identity_holds: bool
    # phi**(m+2) <= y + x*phi < phi**(m+3), checked in Z[phi]
    bracket_holds: bool


def reference_gcd(x: int, y: int) -> int:
    """gcd by repeated subtraction. Slow; only meant as a test oracle."""
    if x < 0 or y < 0:
        raise DomainError(f"operands must be non-negative, got ({x}, {y})")
    if x == 0 and y == 0:
        raise DomainError("gcd(0,0) undefined")
    if x == 0 or y == 0:
        return x or y
    while x != y:
        if x > y:
            x -= y
        else:
            y -= x
    return x


def _tables(x_max: int) -> tuple[list[int], list[int], list[int]]:
    # Lame bounds m well below log_phi(x_max) + 3; pad generously.
    n = max(8, int(math.log(x_max + 1, 1.5)) + 8)
    fibs = [fib(i) for i in range(n + 3)]
    p3 = [3**i for i in range(n)]
    p2 = [2**i for i in range(n)]
    return fibs, p3, p2


def _scan_partition(x_max: int, part: int, parts: int) -> ScanSummary:
    fibs, p3, p2 = _tables(x_max)
    bad = dict.fromkeys(CHECKS, 0)
    examples: dict[str, list[tuple[int, int]]] = {}
    hist: Counter[int] = Counter()
    lame_eq: list[tuple[int, int]] = []
    pairs = 0
    best_m, best_w = 0, None
    g1_max = g2_max = -math.inf
    g1_min = g2_min = math.inf

    def fail(check: str, x: int, y: int) -> None:
        bad[check] += 1
        ex = examples.setdefault(check, [])
        if len(ex) < 10:
            ex.append((x, y))

    for x in range(1 + part, x_max + 1, parts):
        for y in range(x):
            pairs += 1
            s1 = x + y
            a, b = x, y
            s_prev = s1
            ga, gb = x - y, y
            m = 1
            if s1 < 1 or sign_parts(ga - 1, gb) < 0:
                fail("cor1", x, y)
            while b > 1:
                q, r = divmod(a, b)
                s = b + r
                if 3 * s > 2 * s_prev - 1:
                    fail("lemma1", x, y)
                # s_prev - phi*(b - r + r*phi) = (ga - r) + (gb - b)*phi
                sg = sign_parts(ga - r, gb - b)
                if sg < 0:
                    fail("lemma2", x, y)
                if (sg == 0) != (q == 1):
                    fail("lemma2_equality", x, y)
                if s < 1 or sign_parts(b - r - 1, r) < 0:
                    fail("cor1", x, y)
                if p3[m] * s > p2[m] * s1:
                    fail("cor2", x, y)
                m += 1
                a, b, s_prev, ga, gb = b, r, s, b - r, r
            if p3[m - 1] > p2[m - 1] * s1:
                fail("thm1", x, y)
            if sign_parts(y - fibs[m - 1], x - fibs[m]) < 0:
                fail("thm2", x, y)
            if y >= 1:
                if x < fibs[m + 2] or y < fibs[m + 1]:
                    fail("lame", x, y)
                elif x == fibs[m + 2] and y == fibs[m + 1]:
                    lame_eq.append((x, y))
            hist[min(m, HISTOGRAM_CAP)] += 1
            if m > best_m:
                best_m, best_w = m, (x, y)
            gap1 = thm1_bound(x, y) - m
            gap2 = thm2_bound(x, y) - m
            g1_max = max(g1_max, gap1)
            g1_min = min(g1_min, gap1)
            g2_max = max(g2_max, gap2)
            g2_min = min(g2_min, gap2)

    return ScanSummary(
        x_max=x_max,
        pairs_checked=pairs,
        max_m=best_m,
        max_m_witness=best_w,
        tightness_thm1_max_gap=g1_max,
        tightness_thm2_max_gap=g2_max,
        tightness_thm1_min_gap=g1_min,
        tightness_thm2_min_gap=g2_min,
        histogram_m=dict(sorted(hist.items())),
        violations_by_check=bad,
        violation_examples=examples,
        lame_equality_pairs=lame_eq,
    )


def scan(x_max: int, partitions: int = 1, workers: int | None = None) -> ScanSummary:
    """Check every bound on all pairs ``0 <= y < x <= x_max``.

    The pair space is split by x-stride into ``partitions`` pieces. With
    ``workers > 1`` the pieces run in a process pool. The result does not
    depend on either setting.
    """
    if x_max < 1:
        raise ValueError(f"x_max must be >= 1, got {x_max}")
    if partitions < 1:
        raise ValueError(f"partitions must be >= 1, got {partitions}")
    args = [(x_max, p, partitions) for p in range(partitions)]
    if workers is not None and workers > 1 and partitions > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_partition, *zip(*args)))
    else:
        parts = [_scan_partition(*a) for a in args]
    total = ScanSummary(x_max)
    for p in parts:
        total = total.merge(p)
    return total


def tightness_fibonacci(k_max: int) -> list[TightnessRecord]:
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    records = []
    for k in range(1, k_max + 1):
        x, y = fibonacci_pair(k)
        m = iteration_count(x, y)
        bound = thm2_bound(x, y)
        target = GoldenInt(y, x)
        records.append(
            TightnessRecord(
                k=k,
                x=x,
                y=y,
                m=m,
                thm2_float_bound=bound,
                gap=bound - m,
                identity_holds=target == golden_phi_pow(k + 2),
                bracket_holds=golden_phi_pow(m + 2) <= target < golden_phi_pow(m + 3),
            )
        )
    return records


def _fmt(v: float) -> str:
    # 6 fractional digits; str.format rounds the exact binary value half-even
    return f"{v:.6f}"


def summary_row(summary: ScanSummary) -> list[str]:
    wx, wy = summary.max_m_witness or (0, 0)
    return [str(v) for v in (summary.x_max, summary.pairs_checked, summary.violations, summary.max_m, wx, wy)]


def tightness_row(rec: TightnessRecord) -> list[str]:
    return [str(rec.k), str(rec.x), str(rec.y), str(rec.m), _fmt(rec.thm2_float_bound), _fmt(rec.gap)]


def render_csv(records: ScanSummary | Iterable[TightnessRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(records, ScanSummary):
        w.writerow(SUMMARY_HEADER)
        w.writerow(summary_row(records))
    else:
        w.writerow(TIGHTNESS_HEADER)
        w.writerows(tightness_row(r) for r in records)
    return buf.getvalue()


def emit_csv(
    records: ScanSummary | Sequence[TightnessRecord],
    destination: str | os.PathLike[str] | IO[str],
) -> None:
    """Write a scan summary or tightness records as CSV (UTF-8, LF endings)."""
    text = render_csv(records)
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write CSV to {os.fspath(destination)}: {exc.strerror}") from exc
