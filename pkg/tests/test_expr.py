"""Exact expression algebra: canonical form, arithmetic, rendering,
serialization and the evaluation homomorphism."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from eulersums.expr import (
    CATALAN_ATOM,
    SQRT3_ATOM,
    ConstExpr,
    ZERO,
    catalan_expr,
    cot_atom,
    cot_expr,
    eval_numeric,
    from_json_dict,
    hurwitz_atom,
    hurwitz_expr,
    parse_json,
    pi_atom,
    pi_expr,
    rational_expr,
    render,
    sqrt3_expr,
    term_expr,
    to_json_dict,
    zeta_atom,
    zeta_const,
)
from eulersums.numerics import Precision

PREC = Precision(40)


def test_zero_and_equality():
    assert ZERO.is_zero()
    assert rational_expr(0).is_zero()
    assert (zeta_const(3) - zeta_const(3)).is_zero()
    assert zeta_const(3) + zeta_const(5) == zeta_const(5) + zeta_const(3)
    assert zeta_const(3) != zeta_const(5)


def test_atom_validation():
    with pytest.raises(ValueError):
        zeta_atom(1)
    with pytest.raises(ValueError):
        hurwitz_atom(2, Fraction(1))
    with pytest.raises(ValueError):
        hurwitz_atom(2, Fraction(0))
    with pytest.raises(ValueError):
        cot_atom(1, 2)
    with pytest.raises(ValueError):
        pi_atom(0)


def test_special_constructor_rewrites():
    assert zeta_const(0) == rational_expr(Fraction(-1, 2))
    with pytest.raises(ValueError):
        zeta_const(1)
    assert hurwitz_expr(3, Fraction(1)) == zeta_const(3)
    assert cot_expr(1, 2).is_zero()
    assert cot_expr(2, 4).is_zero()


def test_pi_power_merge_and_sqrt3_fold():
    assert pi_expr(2) * pi_expr(3) == pi_expr(5)
    assert sqrt3_expr() * sqrt3_expr() == rational_expr(3)
    e = term_expr(Fraction(1, 2), [SQRT3_ATOM, SQRT3_ATOM, SQRT3_ATOM])
    assert e == sqrt3_expr().scaled(Fraction(3, 2))


def test_distribution_and_scaling():
    a = zeta_const(3) + pi_expr(2).scaled(Fraction(1, 6))
    b = zeta_const(5).scaled(2) - catalan_expr()
    lhs = a * b
    rhs = (zeta_const(3) * b) + (pi_expr(2).scaled(Fraction(1, 6)) * b)
    assert lhs == rhs
    assert a.scaled(0).is_zero()
    assert (-a) + a == ZERO


def test_term_ordering_deterministic():
    e = cot_expr(1, 5) + zeta_const(2) + pi_expr() + catalan_expr() \
        + hurwitz_expr(2, Fraction(1, 3)) + sqrt3_expr()
    kinds = [t.atoms[0].kind for t in e.terms]
    assert kinds == ["pi", "catalan", "sqrt3", "zeta", "hurwitz", "cot"]


def test_render_plain():
    e = zeta_const(3).scaled(Fraction(11, 8))
    assert render(e, "plain") == "11/8 * zeta(3)"
    e2 = pi_expr() * catalan_expr() - zeta_const(3)
    assert render(e2, "plain") == "pi * G - zeta(3)"
    assert render(ZERO, "plain") == "0"


def test_render_latex():
    e = pi_expr(3) * sqrt3_expr() * hurwitz_expr(4, Fraction(1, 3))
    assert render(e.scaled(Fraction(-2, 729)), "latex") == \
        r"-\frac{2}{729}\pi^{3} \sqrt{3} \zeta(4,\frac{1}{3})"
    assert render(cot_expr(1, 5), "latex") == r"\cot(\frac{1\pi}{5})"


def test_json_round_trip():
    e = (pi_expr(2).scaled(Fraction(-5, 27)) * zeta_const(5)
         + hurwitz_expr(2, Fraction(1, 5)) * hurwitz_expr(5, Fraction(4, 5))
         + catalan_expr().scaled(16) + cot_expr(2, 7).scaled(Fraction(1, 3)))
    assert parse_json(render(e, "json")) == e
    assert from_json_dict(to_json_dict(e)) == e


def test_eval_numeric_basics():
    with PREC.workdps():
        assert abs(eval_numeric(pi_expr(2), PREC) - mp.pi ** 2) < mp.mpf("1e-50")
        v = eval_numeric(zeta_const(2) - pi_expr(2).scaled(Fraction(1, 6)), PREC)
        assert abs(v) < mp.mpf("1e-50")
        assert eval_numeric(ZERO, PREC) == 0


# -- randomized structural properties ---------------------------------------

_atoms = st.one_of(
    st.integers(1, 4).map(pi_atom),
    st.just(CATALAN_ATOM),
    st.just(SQRT3_ATOM),
    st.integers(2, 7).map(zeta_atom),
    st.tuples(st.integers(2, 6), st.integers(1, 6), st.integers(2, 7)).map(
        lambda t: hurwitz_atom(t[0], Fraction(min(t[1], t[2] - 1), t[2]))),
    st.tuples(st.integers(1, 6), st.integers(2, 7)).filter(
        lambda t: 0 < Fraction(t[0] % t[1] or 1, t[1]) != Fraction(1, 2)).map(
        lambda t: cot_atom(t[0] % t[1] or 1, t[1])),
)

_coeffs = st.fractions(min_value=-100, max_value=100)

_exprs = st.lists(
    st.tuples(_coeffs, st.lists(_atoms, max_size=3)), max_size=4,
).map(lambda ts: sum((term_expr(c, a) for c, a in ts), ZERO))


@settings(max_examples=120, deadline=None)
@given(_exprs, _exprs)
def test_commutativity(a, b):
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=80, deadline=None)
@given(_exprs, _exprs, _exprs)
def test_associativity_and_distribution(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=120, deadline=None)
@given(_exprs)
def test_canonical_idempotence_and_json(e):
    rebuilt = sum((term_expr(t.coeff, t.atoms) for t in e.terms), ZERO)
    assert rebuilt == e
    assert parse_json(render(e, "json")) == e


@settings(max_examples=40, deadline=None)
@given(_exprs, _exprs)
def test_evaluation_homomorphism(a, b):
    with PREC.workdps():
        va, vb = eval_numeric(a, PREC), eval_numeric(b, PREC)
        scale = max(1, abs(va), abs(vb), abs(va * vb))
        tol = mp.mpf("1e-30") * scale
        assert abs(eval_numeric(a + b, PREC) - (va + vb)) < tol
        assert abs(eval_numeric(a * b, PREC) - va * vb) < tol
