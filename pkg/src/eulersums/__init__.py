"""Exact closed forms for Euler sums with rational-argument harmonic
numbers, verified against independent arbitrary-precision oracles.

Layers:

* :mod:`eulersums.numerics`    -- arbitrary-precision scalar functions;
* :mod:`eulersums.expr`        -- exact algebra over the constant basis
  {pi^m, zeta(s), zeta(s,t), cot(pi j/n), G, sqrt(3)};
* :mod:`eulersums.simplify`    -- sound rewrites (even zeta values,
  special points, Hurwitz pairs, Catalan recognition);
* :mod:`eulersums.closedforms` -- the S/T/A/B families and the lemma
  identities, built as exact expressions;
* :mod:`eulersums.oracle`      -- independent brute-force evaluators and
  the closed-form-vs-oracle verification reports;
* :mod:`eulersums.cli`         -- the ``eulersums`` command.
"""

from .closedforms import (
    A_closed,
    B_closed,
    EulerSumParams,
    LemmaDerivativeParams,
    S_closed,
    T_closed,
    eq3_reference,
    lemma1_rhs,
    lemma2_rhs,
    theta,
)
from .expr import (
    Atom,
    ConstExpr,
    ZERO,
    catalan_expr,
    cot_expr,
    eval_numeric,
    from_json_dict,
    hurwitz_expr,
    parse_json,
    pi_expr,
    rational_expr,
    render,
    sqrt3_expr,
    term_expr,
    to_json_dict,
    zeta_const,
)
from .numerics import BigFloat, Precision
from .oracle import (
    OracleConfig,
    OracleError,
    OracleKind,
    VerificationReport,
    fd_lemma2,
    quad_T,
    quad_lemma1,
    sum_A_direct,
    sum_B_alternating,
    sum_S_direct,
    verify,
)
from .reference import ReferenceExample, load_reference_examples
from .simplify import simplify, simplify_even_zeta, simplify_special_points

__version__ = "0.1.0"

__all__ = [
    "A_closed", "Atom", "B_closed", "BigFloat", "ConstExpr",
    "EulerSumParams", "LemmaDerivativeParams", "OracleConfig", "OracleError",
    "OracleKind", "Precision", "ReferenceExample", "S_closed", "T_closed",
    "VerificationReport", "ZERO", "catalan_expr", "cot_expr",
    "eq3_reference", "eval_numeric", "fd_lemma2", "from_json_dict",
    "hurwitz_expr", "lemma1_rhs", "lemma2_rhs", "load_reference_examples",
    "parse_json", "pi_expr", "quad_T", "quad_lemma1", "rational_expr",
    "render", "simplify", "simplify_even_zeta", "simplify_special_points",
    "sqrt3_expr", "sum_A_direct", "sum_B_alternating", "sum_S_direct",
    "term_expr", "theta", "to_json_dict", "verify", "zeta_const",
]
