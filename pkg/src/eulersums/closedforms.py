"""Exact closed forms for Euler sums with rational-argument harmonic
numbers.

Families (all built as :class:`~eulersums.expr.ConstExpr`):

* ``theta(k, j, n)``          -- zeta(k,j/n) + (-1)^k zeta(k,(n-j)/n),
  with the k = 1 case equal to pi*cot(pi j/n);
* ``S_closed(p, q, n)``       -- sum_k H_{nk}^(p) / k^q          (p+q odd);
* ``T_closed(p, q, n)``       -- integral of
  ln(1-x^n) ln^(p-1)(x) Li_q(x) / x over (0,1)                   (p+q even);
* ``A_closed(p, q, n)``       -- sum_k H_{k/n}^(p) / k^q         (p+q odd);
* ``B_closed(p, q, n)``       -- sum_k (-1)^k H_{k/2n}^(p) / k^q (p+q odd);
* ``eq3_reference(q, n)``     -- the previously known form of
  sum_k H_{k/n} / k^(2q), which A_closed(1, 2q, n) must reproduce;
* ``lemma1_rhs(q, n)``        -- integral of x^(n-1) Li_q(x) over (0,1);
* ``lemma2_rhs(...)``         -- numeric value of the p-th derivative of
  H_{nk} / n^q with respect to n.

The j = 0 terms of the S sums use the analytic-continuation value
zeta(0) = -1/2; without it the reference evaluations are not reproduced.
All coefficients are exact rationals built from arbitrary-size integer
binomials and factorials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from mpmath import mp

from . import numerics
from .expr import (
    ConstExpr,
    ZERO,
    cot_expr,
    hurwitz_expr,
    pi_expr,
    rational_expr,
    term_expr,
    zeta_const,
)
from .numerics import BigFloat, Precision


@dataclass(frozen=True)
class EulerSumParams:
    """The (p, q, n) triple indexing an Euler sum family."""

    p: int
    q: int
    n: int

    def validate_sum(self) -> None:
        """Preconditions shared by the S/A/B families."""
        if self.p < 1 or self.n < 1:
            raise ValueError("p and n must be >= 1")
        if self.q < 2:
            raise ValueError("q must be >= 2 (q = 1 diverges or has no "
                             "closed form)")
        if (self.p + self.q) % 2 == 0:
            raise ValueError("p+q must be odd")

    def validate_integral(self) -> None:
        """Preconditions of the T family."""
        if self.p < 1 or self.q < 1 or self.n < 1:
            raise ValueError("p, q, n must be >= 1")
        if (self.p + self.q) % 2 == 1:
            raise ValueError("p+q must be even")


@dataclass(frozen=True)
class LemmaDerivativeParams:
    """Arguments of the derivative identity: order p, exponent q,
    evaluation point n > 0 (need not be an integer) and inner factor k."""

    p: int
    q: int
    n: Fraction
    k: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1 or self.k < 1:
            raise ValueError("p, q, k must be >= 1")
        if self.n <= 0:
            raise ValueError("n must be > 0")


def theta(k: int, j: int, n: int) -> ConstExpr:
    """zeta(k,j/n) + (-1)^k zeta(k,(n-j)/n); k = 1 gives pi*cot(pi j/n)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 1 <= j <= n - 1:
        raise ValueError("j must lie in [1, n-1]")
    if k == 1:
        return pi_expr() * cot_expr(j, n)
    out = hurwitz_expr(k, Fraction(j, n))
    return out + hurwitz_expr(k, Fraction(n - j, n)).scaled(Fraction(-1) ** k)


def S_closed(p: int, q: int, n: int) -> ConstExpr:
    """Closed form of sum_{k>=1} H_{nk}^(p) / k^q for odd p+q, q >= 2."""
    EulerSumParams(p, q, n).validate_sum()
    out = zeta_const(p + q).scaled(Fraction(1, 2 * n ** p))

    # The n^q factor multiplies (does not divide) this sum: with 1/n^q the
    # n = 1 case still works but every n >= 2 evaluation contradicts direct
    # summation, while n^q reproduces them all (and the reference examples).
    c1 = -Fraction(-1) ** q * Fraction(n) ** q
    for j in range((q - 1) // 2 + 1):
        out = out + (zeta_const(2 * j) * zeta_const(p + q - 2 * j)).scaled(
            c1 * comb(p + q - 2 * j - 1, p - 1) * Fraction(n) ** (-2 * j))

    c2 = Fraction(-1) ** p / Fraction(n) ** p
    for j in range(p // 2 + 1):
        out = out + (zeta_const(2 * j) * zeta_const(p + q - 2 * j)).scaled(
            c2 * comb(p + q - 2 * j - 1, q - 1))

    c3 = Fraction(-1) ** p / (2 * Fraction(n) ** p)
    for j in range(1, n):
        for k in range(1, p + 1):
            piece = theta(k, j, n) * hurwitz_expr(p + q - k, Fraction(n - j, n))
            out = out + piece.scaled(
                c3 * comb(p + q - k - 1, q - 1) * Fraction(-1) ** k)
    return out


def T_closed(p: int, q: int, n: int) -> ConstExpr:
    """Closed form of int_0^1 ln(1-x^n) ln^(p-1)(x) Li_q(x)/x dx, p+q even."""
    EulerSumParams(p, q, n).validate_integral()
    fpm1 = factorial(p - 1)
    lead = -Fraction(fpm1, n ** (p + q - 1))
    out = S_closed(1, p + q, n).scaled(lead * comb(p + q - 2, p - 1))

    for r in range(1, p):
        bracket = S_closed(r + 1, p + q - r, n) \
            - zeta_const(r + 1) * zeta_const(p + q - r)
        out = out + bracket.scaled(
            lead * Fraction(n) ** r * comb(p + q - r - 2, p - r - 1))

    c3 = Fraction(-1) ** (p - 1) * Fraction(fpm1, n ** (p - 1))
    for j in range(1, q):
        out = out + (zeta_const(q - j + 1) * zeta_const(p + j)).scaled(
            c3 * Fraction(-1) ** j / Fraction(n) ** j * comb(j + p - 2, j - 1))
    return out


def eq3_reference(q: int, n: int) -> ConstExpr:
    """Previously known closed form of sum_{k>=1} H_{k/n} / k^(2q)."""
    if q < 1 or n < 1:
        raise ValueError("q and n must be >= 1")
    out = zeta_const(2 * q + 1).scaled(
        Fraction(n ** (2 * q + 1) + 2 * q + 1, 2 * n ** (2 * q)))
    for j in range(1, q):
        out = out - (zeta_const(2 * j) * zeta_const(2 * q + 1 - 2 * j)).scaled(
            Fraction(n ** (2 * j), n ** (2 * q)))
    half = pi_expr().scaled(Fraction(1, 2 * n ** (2 * q)))
    for j in range(1, n):
        out = out + half * cot_expr(j, n) * hurwitz_expr(2 * q, Fraction(n - j, n))
    return out


def A_closed(p: int, q: int, n: int) -> ConstExpr:
    """Closed form of sum_{k>=1} H_{k/n}^(p) / k^q for odd p+q, q >= 2.

    p = 1 (so q even) routes through :func:`eq3_reference`: the general
    formula's leading zeta(p)zeta(q) factor is divergent at p = 1 and the
    two presentations are equal after the cancellation it hides.
    """
    EulerSumParams(p, q, n).validate_sum()
    if p == 1:
        return eq3_reference(q // 2, n)
    out = zeta_const(p) * zeta_const(q)
    lead = -Fraction((-n) ** (p - 1), factorial(p - 1))
    bracket = T_closed(p, q - 1, n)
    if p > 1:
        bracket = bracket + T_closed(p - 1, q, n).scaled(p - 1)
    return out + bracket.scaled(lead)


def B_closed(p: int, q: int, n: int) -> ConstExpr:
    """Closed form of sum_{k>=1} (-1)^k H_{k/2n}^(p) / k^q for odd p+q.

    Built exactly as 2^(1-q) A(p,q,n) - A(p,q,2n); q = 1 is rejected
    because both A values diverge there even though the B series itself
    converges.
    """
    EulerSumParams(p, q, n).validate_sum()
    return A_closed(p, q, n).scaled(Fraction(1, 2 ** (q - 1))) \
        - A_closed(p, q, 2 * n)


def harmonic_rational(m: int) -> Fraction:
    """Exact H_m as a fraction."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return sum((Fraction(1, k) for k in range(1, m + 1)), Fraction(0))


def lemma1_rhs(q: int, n: int) -> ConstExpr:
    """Closed form of int_0^1 x^(n-1) Li_q(x) dx."""
    if q < 1 or n < 1:
        raise ValueError("q and n must be >= 1")
    out = rational_expr(Fraction(-1) ** (q + 1) * harmonic_rational(n)
                        / Fraction(n) ** q)
    for j in range(1, q):
        out = out - zeta_const(q - j + 1).scaled(Fraction(-1) ** j
                                                 / Fraction(n) ** j)
    return out


def lemma2_rhs(params: LemmaDerivativeParams, prec: Precision) -> BigFloat:
    """Numeric value of the p-th derivative of H_{nk}/n^q with respect to
    n, from the closed form; n may be any positive real."""
    p, q, n, k = params.p, params.q, params.n, params.k
    with prec.workdps():
        nn = numerics._as_mpf(n)
        nk = nn * k
        sign = mp.mpf((-1) ** p * factorial(p)) / nn ** (p + q)
        total = sign * comb(p + q - 1, p) * numerics.harmonic(1, nk, prec)
        for r in range(1, p + 1):
            total += (sign * comb(p + q - r - 1, p - r) * nk ** r
                      * (numerics.harmonic(r + 1, nk, prec)
                         - numerics.zeta(r + 1, prec)))
        return total
