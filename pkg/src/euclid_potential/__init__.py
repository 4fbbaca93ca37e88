"""Euclid's algorithm with iteration tracing and exact checks of its
potential-function runtime bounds."""

from .euclid import (
    BezoutCertificate,
    DomainError,
    EuclidStep,
    EuclidTrace,
    extended_gcd,
    fib,
    fibonacci_pair,
    gcd,
    iteration_count,
    trace,
)
from .golden import (
    GoldenInt,
    golden_add,
    golden_cmp,
    golden_make,
    golden_mul_phi,
    golden_phi_pow,
    golden_sign,
    golden_sub,
    golden_to_float,
)
from .harness import (
    ScanSummary,
    TightnessRecord,
    emit_csv,
    reference_gcd,
    scan,
    tightness_fibonacci,
)
from .potential import (
    BoundReport,
    additive_series,
    analyze,
    check_cor2,
    check_lemma_additive,
    check_lemma_golden,
    check_thm1,
    check_thm2,
    golden_series,
    lame_check,
)

__version__ = "0.1.0"
