"""Arbitrary-precision scalar special functions.

Every function takes an explicit :class:`Precision` and returns an
``mpmath.mpf`` computed at ``target_digits + guard_digits`` decimal
digits of working precision.  Results are plain mpf values and can be
mixed freely; mpmath keeps the mantissa of each value as created.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mp

BigFloat = mpmath.mpf

#: default number of guard digits; absorbs cancellation between
#: alternating-sign terms of closed-form expressions.
DEFAULT_GUARD_DIGITS = 15


@dataclass(frozen=True)
class Precision:
    """Requested accuracy: ``target_digits`` correct decimals plus guards."""

    target_digits: int = 40
    guard_digits: int = DEFAULT_GUARD_DIGITS

    def __post_init__(self) -> None:
        if self.target_digits < 10:
            raise ValueError("target_digits must be >= 10")
        if self.guard_digits < 0:
            raise ValueError("guard_digits must be >= 0")

    @property
    def working_dps(self) -> int:
        return self.target_digits + self.guard_digits

    def workdps(self):
        """Context manager setting mpmath to the working precision."""
        return mp.workdps(self.working_dps)

    def tolerance(self) -> BigFloat:
        with self.workdps():
            return mp.mpf(10) ** (-self.target_digits)


def _as_mpf(x) -> BigFloat:
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


@lru_cache(maxsize=None)
def _zeta_cached(s: int, dps: int) -> BigFloat:
    with mp.workdps(dps):
        return mp.zeta(s)


@lru_cache(maxsize=None)
def _hurwitz_cached(s: int, t: Fraction, dps: int) -> BigFloat:
    with mp.workdps(dps):
        return mp.zeta(s, _as_mpf(t))


def zeta(s: int, prec: Precision) -> BigFloat:
    """Riemann zeta at an integer s >= 2."""
    if s < 2:
        raise ValueError("zeta requires s >= 2 (s = 0 and even s are "
                         "handled exactly by the symbolic layer)")
    return _zeta_cached(int(s), prec.working_dps)


def hurwitz_zeta(s: int, t, prec: Precision) -> BigFloat:
    """Hurwitz zeta sum_{k>=0} (k+t)^(-s) for integer s >= 2, 0 < t <= 1."""
    if s < 2:
        raise ValueError("hurwitz_zeta requires s >= 2")
    t = Fraction(t)
    if t <= 0 or t > 1:
        raise ValueError("hurwitz_zeta requires 0 < t <= 1")
    return _hurwitz_cached(int(s), t, prec.working_dps)


def polylog(q: int, x, prec: Precision) -> BigFloat:
    """Li_q(x) for 0 <= x <= 1; q = 1 is computed as -log(1-x)."""
    if q < 1:
        raise ValueError("polylog requires q >= 1")
    with prec.workdps():
        x = _as_mpf(x)
        if x < 0 or x > 1:
            raise ValueError("polylog requires 0 <= x <= 1")
        if x == 1:
            if q == 1:
                raise ValueError("Li_1(1) diverges")
            return mp.zeta(q)
        if q == 1:
            return -mp.log(1 - x)
        return mp.polylog(q, x)


def digamma(x, prec: Precision) -> BigFloat:
    """psi(x) for x > 0."""
    with prec.workdps():
        x = _as_mpf(x)
        if x <= 0:
            raise ValueError("digamma requires x > 0")
        return mp.psi(0, x)


def harmonic(p: int, x, prec: Precision) -> BigFloat:
    """Generalized harmonic number H_x^(p) for real x >= 0.

    p >= 2 uses H_x^(p) = zeta(p) - zeta(p, x+1); p = 1 uses
    psi(x+1) + gamma.
    """
    if p < 1:
        raise ValueError("harmonic requires p >= 1")
    with prec.workdps():
        x = _as_mpf(x)
        if x < 0:
            raise ValueError("harmonic requires x >= 0")
        if x == 0:
            return mp.mpf(0)
        if p == 1:
            return mp.psi(0, x + 1) + mp.euler
        return mp.zeta(p) - mp.zeta(p, x + 1)


def pi_const(prec: Precision) -> BigFloat:
    with prec.workdps():
        return +mp.pi


def euler_gamma(prec: Precision) -> BigFloat:
    with prec.workdps():
        return +mp.euler


def catalan(prec: Precision) -> BigFloat:
    """Catalan constant G = sum_{m>=0} (-1)^m / (2m+1)^2."""
    with prec.workdps():
        return +mp.catalan


def sqrt3(prec: Precision) -> BigFloat:
    with prec.workdps():
        return mp.sqrt(3)


def cot_pi(j: int, n: int, prec: Precision) -> BigFloat:
    """cot(pi*j/n) for 0 < j < n; cot(pi/2) is exactly 0."""
    if not 0 < j < n:
        raise ValueError("cot_pi requires 0 < j < n")
    if 2 * j == n:
        with prec.workdps():
            return mp.mpf(0)
    with prec.workdps():
        t = mp.mpf(j) / n
        return mp.cospi(t) / mp.sinpi(t)
