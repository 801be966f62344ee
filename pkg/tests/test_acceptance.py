"""End-to-end acceptance checks.

Each test covers one acceptance criterion and prints a single
``ACCEPTANCE <name>: PASS``/``FAIL`` line.
"""

from __future__ import annotations

import json
import random
import time
from fractions import Fraction

from mpmath import mp

from eulersums.closedforms import (
    A_closed,
    B_closed,
    EulerSumParams,
    LemmaDerivativeParams,
    S_closed,
    T_closed,
    eq3_reference,
)
from eulersums.expr import (
    CATALAN_ATOM,
    SQRT3_ATOM,
    ZERO,
    cot_atom,
    eval_numeric,
    hurwitz_atom,
    parse_json,
    pi_atom,
    render,
    term_expr,
    zeta_atom,
)
from eulersums.numerics import Precision, catalan, hurwitz_zeta, zeta
from eulersums.oracle import OracleConfig, sum_A_direct, sum_B_alternating, verify
from eulersums.reference import load_reference_examples
from eulersums.simplify import even_zeta_coefficient, simplify


def _report(name: str, ok: bool) -> None:
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, name


def test_criterion_reference_evaluations():
    """The six reference evaluations reproduce exactly, and numerically
    to 1e-35 at 60 digits, within 30 seconds."""
    start = time.monotonic()
    prec = Precision(60)
    builders = {"A": A_closed, "B": B_closed}
    ok = True
    for ex in load_reference_examples():
        built = simplify(builders[ex.kind](ex.p, ex.q, ex.n), catalan=True)
        with prec.workdps():
            d = abs(eval_numeric(built, prec) - eval_numeric(ex.expr, prec))
            ok = ok and built == ex.expr and d < mp.mpf("1e-35")
    elapsed = time.monotonic() - start
    _report("reference-evaluations", ok and elapsed < 30)


def test_criterion_p1_routing_equivalence():
    """The p = 1 closed form and the independently coded reference form
    agree to 1e-30 for q in {2,4,6}, n in 1..6."""
    prec = Precision(40)
    ok = True
    with prec.workdps():
        for q_half in (1, 2, 3):
            for n in range(1, 7):
                a = eval_numeric(A_closed(1, 2 * q_half, n), prec)
                b = eval_numeric(eq3_reference(q_half, n), prec)
                ok = ok and abs(a - b) < mp.mpf("1e-30")
    _report("p1-routing-equivalence", ok)


def _sum_grid(max_pq: int, max_n: int):
    for p in range(1, max_pq + 1):
        for q in range(2, max_pq + 1):
            if (p + q) % 2 == 0:
                continue
            for n in range(1, max_n + 1):
                yield EulerSumParams(p, q, n)


def test_criterion_dual_engine_grids():
    """Every closed form matches its independent oracle to 1e-20 at 40
    digits across the parameter grids (relative 1e-15 for the
    derivative identity)."""
    cfg = OracleConfig(direct_terms=1500, prec=Precision(40))
    ok = True
    for params in _sum_grid(6, 4):
        ok = ok and verify("A", params, cfg, tolerance="1e-20").passed
        ok = ok and verify("S", params, cfg, tolerance="1e-20").passed
    for params in _sum_grid(6, 3):
        ok = ok and verify("B", params, cfg, tolerance="1e-20").passed
    for p in range(1, 8):
        for q in range(1, 8):
            if (p + q) % 2 or p + q > 8:
                continue
            for n in range(1, 5):
                ok = ok and verify("T", EulerSumParams(p, q, n), cfg,
                                   tolerance="1e-20").passed
    for q in range(1, 6):
        for n in range(1, 6):
            ok = ok and verify("lemma1", EulerSumParams(1, q, n), cfg,
                               tolerance="1e-20").passed
    with cfg.prec.workdps():
        for p in range(1, 4):
            for q in (1, 2, 3):
                for k in (1, 2, 5):
                    for n in (Fraction(1), Fraction(3, 2), Fraction(2)):
                        r = verify("lemma2",
                                   LemmaDerivativeParams(p, q, n, k), cfg)
                        ok = ok and r.rel_error < mp.mpf("1e-15")
    _report("dual-engine-grids", ok)


def test_criterion_alternating_identity_oracles_only():
    """The alternating sum equals 2^(1-q) A(n) - A(2n) when all three
    values come from the series oracles (no closed forms involved)."""
    cfg = OracleConfig(direct_terms=1500, prec=Precision(40))
    ok = True
    with cfg.prec.workdps():
        for p in range(1, 5):
            for q in range(2, 5):
                if (p + q) % 2 == 0:
                    continue
                for n in (1, 2):
                    b = sum_B_alternating(EulerSumParams(p, q, n), cfg)
                    a1 = sum_A_direct(EulerSumParams(p, q, n), cfg)
                    a2 = sum_A_direct(EulerSumParams(p, q, 2 * n), cfg)
                    rhs = a1 / 2 ** (q - 1) - a2
                    ok = ok and abs(b - rhs) < mp.mpf("1e-18")
    _report("alternating-identity", ok)


def test_criterion_numeric_identities():
    """Scalar-layer identities: multiplication theorem, the 1/2-shift
    reflection, even zeta values against exact Bernoulli coefficients,
    and the Catalan constant to 30 digits."""
    prec = Precision(40)
    ok = True
    with prec.workdps():
        for n in range(2, 7):
            for s in range(2, 6):
                lhs = mp.fsum(hurwitz_zeta(s, Fraction(j, n), prec)
                              for j in range(1, n + 1))
                ok = ok and abs(lhs - mp.mpf(n) ** s * zeta(s, prec)) \
                    < mp.mpf("1e-34")
        for s in range(2, 8):
            ok = ok and abs(hurwitz_zeta(s, Fraction(1, 2), prec)
                            - (2 ** s - 1) * zeta(s, prec)) < mp.mpf("1e-34")
        for j in range(1, 7):
            c = even_zeta_coefficient(2 * j)
            want = mp.mpf(c.numerator) / c.denominator * mp.pi ** (2 * j)
            ok = ok and abs(zeta(2 * j, prec) - want) < mp.mpf("1e-34")
        g = (hurwitz_zeta(2, Fraction(1, 4), prec)
             - hurwitz_zeta(2, Fraction(3, 4), prec)) / 16
        ok = ok and abs(g - catalan(prec)) < mp.mpf("1e-30")
    _report("numeric-identities", ok)


def _random_expr(rng: random.Random):
    def atom():
        kind = rng.randrange(6)
        if kind == 0:
            return pi_atom(rng.randint(1, 5))
        if kind == 1:
            return CATALAN_ATOM
        if kind == 2:
            return SQRT3_ATOM
        if kind == 3:
            return zeta_atom(rng.randint(2, 9))
        if kind == 4:
            n = rng.randint(2, 9)
            return hurwitz_atom(rng.randint(2, 7),
                                Fraction(rng.randint(1, n - 1), n))
        n = rng.randint(3, 9)
        j = rng.choice([j for j in range(1, n)
                        if Fraction(j, n) != Fraction(1, 2)])
        return cot_atom(j, n)

    out = ZERO
    for _ in range(rng.randint(0, 4)):
        coeff = Fraction(rng.randint(-50, 50), rng.randint(1, 30))
        out = out + term_expr(coeff, [atom() for _ in range(rng.randint(0, 3))])
    return out


def test_criterion_property_suites():
    """At least 1000 randomized structural checks finish inside a
    minute: canonical idempotence, serialization round-trips, and the
    parameter parity gates."""
    start = time.monotonic()
    rng = random.Random(20260824)
    ok = True
    cases = 0
    for _ in range(400):
        e = _random_expr(rng)
        rebuilt = sum((term_expr(t.coeff, t.atoms) for t in e.terms), ZERO)
        ok = ok and rebuilt == e
        cases += 1
    for _ in range(400):
        e = _random_expr(rng)
        ok = ok and parse_json(render(e, "json")) == e
        ok = ok and parse_json(json.dumps(json.loads(render(e, "json")))) == e
        cases += 1
    prec = Precision(20)
    with prec.workdps():
        for _ in range(120):
            a, b = _random_expr(rng), _random_expr(rng)
            va, vb = eval_numeric(a, prec), eval_numeric(b, prec)
            scale = max(mp.mpf(1), abs(va), abs(vb), abs(va * vb))
            tol = mp.mpf("1e-15") * scale
            ok = ok and abs(eval_numeric(a + b, prec) - (va + vb)) < tol
            ok = ok and abs(eval_numeric(a * b, prec) - va * vb) < tol
            cases += 2
    builders = {"S": S_closed, "A": A_closed, "B": B_closed, "T": T_closed}
    for _ in range(300):
        kind = rng.choice("SABT")
        p, q, n = rng.randint(1, 5), rng.randint(1, 5), rng.randint(1, 3)
        wants_even = kind == "T"
        valid = ((p + q) % 2 == 0) == wants_even and (wants_even or q >= 2)
        try:
            builders[kind](p, q, n)
            built = True
        except ValueError:
            built = False
        ok = ok and built == valid
        cases += 1
    elapsed = time.monotonic() - start
    _report("property-suites", ok and cases >= 1000 and elapsed < 60)
