"""Shared fixtures and independent numeric oracles for the tests.

The helpers here deliberately avoid the library's own evaluation paths
(and mpmath's ``zeta``/``polylog``) so that value comparisons in the
tests are genuinely two-sided.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import mpmath
import pytest
from mpmath import mp

from eulersums.numerics import Precision


@pytest.fixture
def prec40() -> Precision:
    return Precision(40)


@pytest.fixture
def prec60() -> Precision:
    return Precision(60)


def zeta_series(s: int, t: Fraction = Fraction(1), dps: int = 60) -> mp.mpf:
    """Hurwitz zeta sum_{k>=0} (k+t)^(-s) by direct summation plus an
    Euler-Maclaurin tail written out explicitly (no mpmath.zeta)."""
    assert s >= 2 and 0 < t <= 1
    with mp.workdps(dps + 10):
        tv = mp.mpf(t.numerator) / t.denominator
        N = 200
        head = mp.fsum((k + tv) ** -s for k in range(N))
        a = N + tv
        tail = a ** (1 - s) / (s - 1) + a ** -s / 2
        rising = mp.mpf(s)
        power = mp.mpf(a) ** (-s - 1)
        for j in range(1, 9):
            bn, bd = mpmath.bernfrac(2 * j)
            tail += (mp.mpf(int(bn)) / int(bd)) / factorial(2 * j) \
                * rising * power
            rising *= (s + 2 * j - 1) * (s + 2 * j)
            power /= a * a
        return head + tail


def polylog_series(q: int, x, terms: int = 10_000, dps: int = 45) -> mp.mpf:
    """Li_q(x) for 0 <= x < 1 by direct summation of x^k / k^q."""
    with mp.workdps(dps):
        xv = mp.mpf(x)
        return mp.fsum(xv ** k / mp.mpf(k) ** q for k in range(1, terms + 1))
