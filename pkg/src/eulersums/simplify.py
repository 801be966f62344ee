"""Simplification passes for :class:`~eulersums.expr.ConstExpr`.

Three groups of sound rewrites:

* even zeta values to pi powers via exact Bernoulli numbers;
* special-point rewrites: zeta(s,1/2), exact cotangent values at
  denominators 3, 4, 6 (with a sqrt(3) auxiliary atom) and cotangent
  reflection cot(pi(n-j)/n) = -cot(pi j/n);
* Hurwitz pairs zeta(s,t) +/- zeta(s,1-t) at t in {1/4, 1/3, 1/6}:
  the symmetric combination reduces by the multiplication theorem, the
  antisymmetric one for odd s by differentiating the digamma reflection
  formula (giving rational-in-cot multiples of pi^s), and for s = 2 at
  t = 1/4 to the Catalan constant when that rewrite is enabled.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

import mpmath

from .expr import (
    CATALAN_ATOM,
    COT,
    HURWITZ,
    PI,
    SQRT3_ATOM,
    ZETA,
    Atom,
    ConstExpr,
    ZERO,
    cot_atom,
    hurwitz_atom,
    pi_atom,
    term_expr,
    zeta_atom,
    zeta_const,
)


@lru_cache(maxsize=None)
def bernoulli_fraction(m: int) -> Fraction:
    p, q = mpmath.bernfrac(m)
    return Fraction(int(p), int(q))


@lru_cache(maxsize=None)
def even_zeta_coefficient(s: int) -> Fraction:
    """Exact c with zeta(s) = c * pi^s for even s >= 2."""
    if s < 2 or s % 2:
        raise ValueError("requires even s >= 2")
    j = s // 2
    return (Fraction(-1) ** (j + 1) * bernoulli_fraction(s)
            * Fraction(2) ** s / (2 * factorial(s)))


def simplify_even_zeta(e: ConstExpr) -> ConstExpr:
    """Replace every Zeta(2j) atom with its exact pi^(2j) multiple."""
    out = ZERO
    for term in e.terms:
        coeff = term.coeff
        atoms = []
        for a in term.atoms:
            if a.kind == ZETA and a.s % 2 == 0:
                coeff *= even_zeta_coefficient(a.s)
                atoms.append(pi_atom(a.s))
            else:
                atoms.append(a)
        out = out + term_expr(coeff, atoms)
    return out


# exact cot(pi j/n) values as (rational, sqrt3_exponent); cot(pi/4) = 1,
# cot(pi/3) = sqrt(3)/3, cot(pi/6) = sqrt(3)
_COT_TABLE = {
    (1, 4): (Fraction(1), 0),
    (3, 4): (Fraction(-1), 0),
    (1, 3): (Fraction(1, 3), 1),
    (2, 3): (Fraction(-1, 3), 1),
    (1, 6): (Fraction(1), 1),
    (5, 6): (Fraction(-1), 1),
}

# Hurwitz shifts whose (t, 1-t) pairs admit closed combinations
_PAIR_SHIFTS = {Fraction(1, 4), Fraction(3, 4), Fraction(1, 3),
                Fraction(2, 3), Fraction(1, 6), Fraction(5, 6)}


@lru_cache(maxsize=None)
def _cot_derivative_poly(m: int) -> tuple[int, ...]:
    """Coefficients of P_m with (d/dt)^m (pi cot(pi t)) = pi^(m+1) P_m(c),
    c = cot(pi t).  Recurrence: P_0 = c, P_{m+1} = -(1 + c^2) P_m'."""
    if m == 0:
        return (0, 1)
    p = _cot_derivative_poly(m - 1)
    dp = [d * p[d] for d in range(1, len(p))]
    out = [0] * (len(dp) + 2)
    for d, a in enumerate(dp):
        out[d] -= a
        out[d + 2] -= a
    return tuple(out)


def _eval_poly_at_cot(coeffs: tuple[int, ...], r: Fraction, e3: int):
    """Evaluate an integer polynomial at c = r * sqrt(3)^e3; returns the
    (rational, sqrt3) components."""
    rat = Fraction(0)
    s3 = Fraction(0)
    for d, a in enumerate(coeffs):
        if a == 0:
            continue
        v = a * r ** d * Fraction(3) ** ((d * e3) // 2)
        if (d * e3) % 2:
            s3 += v
        else:
            rat += v
    return rat, s3


_PAIR_COT = {Fraction(1, 4): (Fraction(1), 0),
             Fraction(1, 3): (Fraction(1, 3), 1),
             Fraction(1, 6): (Fraction(1), 1)}


def _antisym_closed(s: int, t: Fraction, catalan: bool) -> ConstExpr | None:
    """zeta(s,t) - zeta(s,1-t) in closed form, or None if there is none."""
    if s == 2 and t == Fraction(1, 4) and catalan:
        return term_expr(16, [CATALAN_ATOM])
    if s % 2 == 0:
        return None
    r, e3 = _PAIR_COT[t]
    rat, s3 = _eval_poly_at_cot(_cot_derivative_poly(s - 1), r, e3)
    f = factorial(s - 1)
    out = term_expr(rat / f, [pi_atom(s)])
    if s3:
        out = out + term_expr(s3 / f, [pi_atom(s), SQRT3_ATOM])
    return out


def _sym_closed(s: int, t: Fraction) -> ConstExpr:
    """zeta(s,t) + zeta(s,1-t) via the multiplication theorem."""
    if t == Fraction(1, 4):
        c = Fraction(4 ** s - 2 ** s)
    elif t == Fraction(1, 3):
        c = Fraction(3 ** s - 1)
    elif t == Fraction(1, 6):
        c = Fraction(6 ** s - 3 ** s - 2 ** s + 1)
    else:
        raise ValueError(t)
    return zeta_const(s).scaled(c)


def _atom_pass(e: ConstExpr) -> ConstExpr:
    """Per-atom rewrites: zeta(s,1/2), cot table, cot reflection."""
    out = ZERO
    for term in e.terms:
        coeff = term.coeff
        atoms = []
        for a in term.atoms:
            if a.kind == HURWITZ and a.t == Fraction(1, 2):
                coeff *= 2 ** a.s - 1
                atoms.append(zeta_atom(a.s))
            elif a.kind == COT:
                exact = _COT_TABLE.get((a.j, a.n))
                if exact is not None:
                    r, e3 = exact
                    coeff *= r
                    if e3:
                        atoms.append(SQRT3_ATOM)
                elif 2 * a.j > a.n:
                    coeff = -coeff
                    atoms.append(cot_atom(a.n - a.j, a.n))
                else:
                    atoms.append(a)
            else:
                atoms.append(a)
        out = out + term_expr(coeff, atoms)
    return out


def _pair_pass(e: ConstExpr, catalan: bool) -> tuple[ConstExpr, bool]:
    """One round of Hurwitz-pair reduction; returns (expr, changed)."""
    terms = {t.atoms: t.coeff for t in e.terms}
    for key, coeff in terms.items():
        for idx, a in enumerate(key):
            if a.kind != HURWITZ or a.t not in _PAIR_SHIFTS:
                continue
            if key.count(a) != 1:
                continue
            t_low = min(a.t, 1 - a.t)
            partner = hurwitz_atom(a.s, 1 - a.t)
            rest = key[:idx] + key[idx + 1:]
            _, partner_key = _pair_key(rest, partner)
            if partner_key == key:
                continue
            a_this = coeff
            a_other = terms.get(partner_key, Fraction(0))
            if a.t == t_low:
                a_low, a_high = a_this, a_other
            else:
                a_low, a_high = a_other, a_this
            sym = (a_low + a_high) / 2
            anti = (a_low - a_high) / 2
            anti_closed = _antisym_closed(a.s, t_low, catalan)
            if anti != 0 and anti_closed is None:
                continue
            # full reduction: drop both terms, add the closed combination
            rest_expr = term_expr(1, rest)
            replacement = _sym_closed(a.s, t_low).scaled(sym) * rest_expr
            if anti != 0:
                replacement = replacement + anti_closed.scaled(anti) * rest_expr
            removed = term_expr(a_this, key) + term_expr(a_other, partner_key)
            return e - removed + replacement, True
    return e, False


def _pair_key(rest: tuple[Atom, ...], extra: Atom):
    from .expr import _normalize  # canonical key for a hypothetical term
    return None, _normalize(Fraction(1), rest + (extra,))[1]


def simplify_special_points(e: ConstExpr, catalan: bool = False) -> ConstExpr:
    """Apply the special-point rewrite table to a fixpoint.

    ``catalan`` enables recognizing (zeta(2,1/4) - zeta(2,3/4))/16 as G;
    it is off by default since that rewrite is presentation-only.
    """
    while True:
        e2 = _atom_pass(e)
        e2, changed = _pair_pass(e2, catalan)
        if not changed and e2 == e:
            return e2
        e = e2


def simplify(e: ConstExpr, even_zeta: bool = True, special_points: bool = True,
             catalan: bool = False) -> ConstExpr:
    """Run the enabled passes until the expression stops changing."""
    while True:
        before = e
        if special_points:
            e = simplify_special_points(e, catalan=catalan)
        if even_zeta:
            e = simplify_even_zeta(e)
        if e == before:
            return e
