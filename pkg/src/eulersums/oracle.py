"""Independent brute-force verification engines.

Each oracle computes an Euler-sum / integral value without going through
the closed-form builders: accelerated direct summation for the S and A
families, Euler-transformed alternating summation for B, tanh-sinh
quadrature for T and the moment integral, Richardson-extrapolated central
finite differences for the derivative identity.

Oracles evaluate their summands at the ambient mpmath precision (set from
the config) so that numerical differentiation and quadrature can raise
precision internally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from mpmath import mp

from . import numerics
from .closedforms import (
    A_closed,
    B_closed,
    EulerSumParams,
    LemmaDerivativeParams,
    S_closed,
    T_closed,
    lemma1_rhs,
    lemma2_rhs,
)
from .expr import eval_numeric
from .numerics import BigFloat, Precision


class OracleError(Exception):
    """Raised when an oracle cannot certify its own convergence."""


@dataclass(frozen=True)
class OracleConfig:
    direct_terms: int = 10_000
    tail_order: int = 8
    prec: Precision = field(default_factory=Precision)
    quad_levels: int = 12

    def __post_init__(self) -> None:
        if self.direct_terms < 100:
            raise ValueError("direct_terms must be >= 100")
        if self.tail_order not in range(2, 17, 2):
            raise ValueError("tail_order must be an even integer in [2, 16]")


class OracleKind(str, Enum):
    SUMMATION = "summation"
    ALTERNATING = "alternating"
    QUADRATURE = "quadrature"
    FINITE_DIFFERENCE = "finite_difference"


@dataclass(frozen=True)
class VerificationReport:
    params: object
    closed_value: BigFloat
    oracle_value: BigFloat
    abs_error: BigFloat
    rel_error: BigFloat
    tolerance: BigFloat
    passed: bool
    oracle_kind: OracleKind


def _harmonic(p: int, x) -> BigFloat:
    """H_x^(p) at the ambient precision."""
    if x == 0:
        return mp.mpf(0)
    if p == 1:
        return mp.psi(0, x + 1) + mp.euler
    return mp.zeta(p) - mp.zeta(p, x + 1)


def _euler_maclaurin_tail(f, a: int, order: int) -> BigFloat:
    """sum_{k>=a} f(k) for smooth decaying f, via the Euler-Maclaurin
    formula: integral + f(a)/2 - Bernoulli-weighted odd derivatives."""
    a = mp.mpf(a)
    tail = mp.quad(f, [a, mp.inf]) + f(a) / 2
    for j in range(1, order // 2 + 1):
        tail -= mp.bernoulli(2 * j) / mp.factorial(2 * j) * mp.diff(f, a, 2 * j - 1)
    return tail


def _checked_tail(f, a: int, cfg: OracleConfig) -> BigFloat:
    """Tail with a consistency check between successive correction orders."""
    full = _euler_maclaurin_tail(f, a, cfg.tail_order)
    if cfg.tail_order > 2:
        lower = _euler_maclaurin_tail(f, a, cfg.tail_order - 2)
        # the disagreement bounds the lower order's truncation error; it
        # must sit well below the oracle's own error budget
        if abs(full - lower) > mp.mpf(10) ** (-(cfg.prec.target_digits - 15)):
            raise OracleError(
                f"Euler-Maclaurin tail orders {cfg.tail_order - 2} and "
                f"{cfg.tail_order} disagree by {mp.nstr(abs(full - lower), 3)}")
    return full


def _harmonic_ladder(p: int, n: int, count: int) -> list:
    """H_{k/n}^(p) for k = 1..count, via the step recurrence
    H_{x+1}^(p) = H_x^(p) + 1/(x+1)^p on each residue class mod n."""
    vals = [mp.mpf(0)] * (count + 1)
    for r in range(1, min(n, count) + 1):
        vals[r] = _harmonic(p, mp.mpf(r) / n)
    for k in range(n + 1, count + 1):
        vals[k] = vals[k - n] + (mp.mpf(n) / k) ** p
    return vals


def sum_A_direct(params: EulerSumParams, cfg: OracleConfig) -> BigFloat:
    """Direct evaluation of sum_{k>=1} H_{k/n}^(p) / k^q."""
    p, q, n = params.p, params.q, params.n
    if q < 2:
        raise ValueError("q must be >= 2 for convergence")
    with mp.workdps(cfg.prec.working_dps):
        K = cfg.direct_terms
        ladder = _harmonic_ladder(p, n, K)
        head = mp.fsum(ladder[k] / mp.mpf(k) ** q for k in range(1, K + 1))
        f = lambda x: _harmonic(p, x / n) / x ** q
        return head + _checked_tail(f, K + 1, cfg)


def sum_S_direct(p: int, q: int, n: int, cfg: OracleConfig) -> BigFloat:
    """Direct evaluation of sum_{k>=1} H_{nk}^(p) / k^q.

    The head uses an exact running partial sum for the integer-argument
    harmonic numbers; the tail uses Euler-Maclaurin on the smooth
    continuation.
    """
    if q < 2:
        raise ValueError("q must be >= 2 for convergence")
    with mp.workdps(cfg.prec.working_dps):
        K = cfg.direct_terms
        head = mp.mpf(0)
        h = mp.mpf(0)
        m = 0
        for k in range(1, K + 1):
            while m < n * k:
                m += 1
                h += mp.mpf(1) / mp.mpf(m) ** p
            head += h / mp.mpf(k) ** q
        f = lambda x: _harmonic(p, n * x) / x ** q
        return head + _checked_tail(f, K + 1, cfg)


def _euler_transform_alternating(terms: list) -> BigFloat:
    """sum_{m>=0} (-1)^m terms[m] by the Euler transformation:
    sum_i (-1)^i (Delta^i t)_0 / 2^(i+1)."""
    total = mp.mpf(0)
    sign = 1
    row = list(terms)
    for i in range(len(terms)):
        total += sign * row[0] / mp.mpf(2) ** (i + 1)
        sign = -sign
        row = [y - x for x, y in zip(row, row[1:])]
        if not row:
            break
    return total


def sum_B_alternating(params: EulerSumParams, cfg: OracleConfig) -> BigFloat:
    """Direct evaluation of sum_{k>=1} (-1)^k H_{k/2n}^(p) / k^q.

    Head terms are summed as written; the alternating tail is accelerated
    with the Euler transformation.  This path never uses the
    2^(1-q) A(n) - A(2n) identity that it is meant to check.
    """
    p, q, n = params.p, params.q, params.n
    if q < 2:
        raise ValueError("q must be >= 2 for convergence")
    with mp.workdps(cfg.prec.working_dps):
        K = cfg.direct_terms
        M = max(40, cfg.prec.working_dps)
        ladder = _harmonic_ladder(p, 2 * n, K + M)
        head = mp.fsum((-1) ** k * ladder[k] / mp.mpf(k) ** q
                       for k in range(1, K + 1))
        # tail = (-1)^(K+1) * sum_{m>=0} (-1)^m b_m with b_m = a_{K+1+m}
        b = [ladder[K + 1 + m] / mp.mpf(K + 1 + m) ** q for m in range(M)]
        return head + (-1) ** (K + 1) * _euler_transform_alternating(b)


def _polylog(q: int, x, cfg: OracleConfig) -> BigFloat:
    if x == 1:
        return numerics.zeta(q, cfg.prec)
    return numerics.polylog(q, x, cfg.prec)


def _quad_split(g_lo, g_hi, cfg: OracleConfig) -> BigFloat:
    """Integrate over (0,1) as int_0^(1/2) g_lo(x) + int_0^(1/2) g_hi(u),
    u = 1-x, so each integrand sees an exact small node near its
    singular endpoint."""
    half = mp.mpf(1) / 2
    v1, e1 = mp.quad(g_lo, [0, half], maxdegree=cfg.quad_levels, error=True)
    v2, e2 = mp.quad(g_hi, [0, half], maxdegree=cfg.quad_levels, error=True)
    if e1 + e2 > mp.mpf(10) ** (-cfg.prec.target_digits + 5):
        raise OracleError("tanh-sinh quadrature did not converge: "
                          f"error estimate {mp.nstr(e1 + e2, 3)}")
    return v1 + v2


def quad_T(params: EulerSumParams, cfg: OracleConfig) -> BigFloat:
    """Tanh-sinh quadrature of int_0^1 ln(1-x^n) ln^(p-1)(x) Li_q(x)/x dx.

    Near x = 1 the integrand is evaluated in u = 1-x with log1p/expm1 so
    the log singularity costs no cancellation.
    """
    p, q, n = params.p, params.q, params.n
    with mp.workdps(cfg.prec.working_dps):
        def g_lo(x):
            if x <= 0:
                return mp.mpf(0)
            return (mp.log(1 - x ** n) * mp.log(x) ** (p - 1)
                    * _polylog(q, x, cfg) / x)

        def g_hi(u):
            if u <= 0:
                return mp.mpf(0)
            lnx = mp.log1p(-u)
            liq = -mp.log(u) if q == 1 else _polylog(q, 1 - u, cfg)
            return mp.log(-mp.expm1(n * lnx)) * lnx ** (p - 1) * liq / (1 - u)

        return _quad_split(g_lo, g_hi, cfg)


def quad_lemma1(q: int, n: int, cfg: OracleConfig) -> BigFloat:
    """Tanh-sinh quadrature of int_0^1 x^(n-1) Li_q(x) dx."""
    if q < 1 or n < 1:
        raise ValueError("q and n must be >= 1")
    with mp.workdps(cfg.prec.working_dps):
        def g_lo(x):
            if x <= 0:
                return mp.mpf(0)
            return x ** (n - 1) * _polylog(q, x, cfg)

        def g_hi(u):
            if u <= 0:
                return mp.mpf(0)
            liq = -mp.log(u) if q == 1 else _polylog(q, 1 - u, cfg)
            return mp.exp((n - 1) * mp.log1p(-u)) * liq

        return _quad_split(g_lo, g_hi, cfg)


def fd_lemma2(params: LemmaDerivativeParams, cfg: OracleConfig) -> BigFloat:
    """p-th derivative of x -> H_{xk} / x^q at x = n, via order-2 central
    differences Richardson-extrapolated through four halvings of the
    step (leaving truncation O(h^10))."""
    p, q, n, k = params.p, params.q, params.n, params.k
    dps = max(cfg.prec.working_dps, 80)
    with mp.workdps(dps):
        x0 = mp.mpf(n.numerator) / n.denominator if isinstance(n, Fraction) \
            else mp.mpf(n)

        def g(x):
            return _harmonic(1, x * k) / x ** q

        def central(h):
            tot = mp.mpf(0)
            for i in range(p + 1):
                tot += (-1) ** i * mp.binomial(p, i) * g(x0 + (mp.mpf(p) / 2 - i) * h)
            return tot / h ** p

        levels = 4
        h0 = mp.mpf("1e-6")
        table = [central(h0 / 2 ** i) for i in range(levels)]
        prev = None
        for j in range(1, levels):
            fac = mp.mpf(4) ** j
            prev = table[-1]
            table = [(fac * table[i + 1] - table[i]) / (fac - 1)
                     for i in range(len(table) - 1)]
        scale = max(abs(table[0]), mp.mpf(1))
        if abs(table[0] - prev) / scale > mp.mpf("1e-15"):
            raise OracleError("Richardson extrapolation stalled: last two "
                              f"levels differ by {mp.nstr(abs(table[0] - prev), 3)}")
        return table[0]


_ORACLE_KINDS = {
    "A": OracleKind.SUMMATION,
    "S": OracleKind.SUMMATION,
    "B": OracleKind.ALTERNATING,
    "T": OracleKind.QUADRATURE,
    "lemma1": OracleKind.QUADRATURE,
    "lemma2": OracleKind.FINITE_DIFFERENCE,
}


def verify(kind: str, params, cfg: OracleConfig | None = None,
           tolerance=None) -> VerificationReport:
    """Evaluate the closed form and the matching oracle, compare."""
    cfg = cfg or OracleConfig()
    prec = cfg.prec
    if kind == "A":
        closed = eval_numeric(A_closed(params.p, params.q, params.n), prec)
        oracle_value = sum_A_direct(params, cfg)
    elif kind == "S":
        closed = eval_numeric(S_closed(params.p, params.q, params.n), prec)
        oracle_value = sum_S_direct(params.p, params.q, params.n, cfg)
    elif kind == "B":
        closed = eval_numeric(B_closed(params.p, params.q, params.n), prec)
        oracle_value = sum_B_alternating(params, cfg)
    elif kind == "T":
        closed = eval_numeric(T_closed(params.p, params.q, params.n), prec)
        oracle_value = quad_T(params, cfg)
    elif kind == "lemma1":
        closed = eval_numeric(lemma1_rhs(params.q, params.n), prec)
        oracle_value = quad_lemma1(params.q, params.n, cfg)
    elif kind == "lemma2":
        closed = lemma2_rhs(params, prec)
        oracle_value = fd_lemma2(params, cfg)
    else:
        raise ValueError(f"unknown verification kind {kind!r}")
    with mp.workdps(prec.working_dps):
        if tolerance is None:
            tolerance = mp.mpf(10) ** (-20)
        else:
            tolerance = mp.mpf(tolerance)
        abs_error = abs(closed - oracle_value)
        scale = max(abs(closed), abs(oracle_value))
        rel_error = abs_error / scale if scale else mp.mpf(0)
        return VerificationReport(
            params=params,
            closed_value=closed,
            oracle_value=oracle_value,
            abs_error=abs_error,
            rel_error=rel_error,
            tolerance=tolerance,
            passed=bool(abs_error < tolerance),
            oracle_kind=_ORACLE_KINDS[kind],
        )
