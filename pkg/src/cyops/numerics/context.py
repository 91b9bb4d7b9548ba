"""Precision settings that travel with every numeric call."""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass

import mpmath


@dataclass(frozen=True)
class PrecisionContext:
    digits: int = 30
    truncation: int = 61
    tolerance: float = 1e-6
    good_threshold: float = 1e-6
    denominator_bound: int = 10**6

    def __post_init__(self):
        if self.digits < 30:
            raise ValueError(f"need at least 30 decimal digits, got {self.digits}")
        if self.truncation < 8:
            raise ValueError(f"series truncation {self.truncation} is too small")

    @contextmanager
    def working(self):
        """Run a block at this context's precision without leaking it."""
        with mpmath.workdps(self.digits):
            yield


DEFAULT = PrecisionContext()


def mpf(x):
    """Exact rational (or int) to an mpf at the current precision."""
    num = getattr(x, "numerator", None)
    if num is not None:
        return mpmath.mpf(num) / x.denominator
    return mpmath.mpf(x)


def evaluate_series(coeffs, x):
    acc = mpmath.mpf(0)
    for c in reversed(list(coeffs)):
        acc = acc * x + mpf(c)
    return acc
