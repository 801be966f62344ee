"""Exact algebra over the constant basis {pi^m, zeta(s), zeta(s,t),
cot(pi j/n), G, sqrt(3)}.

A :class:`ConstExpr` is a canonical finite sum of terms, each a rational
coefficient times a multiset of atoms.  All arithmetic is exact; numeric
evaluation delegates scalar values to :mod:`eulersums.numerics`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from mpmath import mp

from . import numerics
from .numerics import BigFloat, Precision

Rational = Fraction

# atom kinds, in canonical sort order
PI = "pi"
CATALAN = "catalan"
SQRT3 = "sqrt3"
ZETA = "zeta"
HURWITZ = "hurwitz"
COT = "cot"

_KIND_RANK = {PI: 0, CATALAN: 1, SQRT3: 2, ZETA: 3, HURWITZ: 4, COT: 5}


@dataclass(frozen=True)
class Atom:
    """One basis constant.  Unused fields stay at their defaults."""

    kind: str
    power: int = 1                      # pi exponent
    s: int = 0                          # zeta / hurwitz index
    t: Fraction = Fraction(0)           # hurwitz shift, in (0, 1)
    j: int = 0                          # cot numerator
    n: int = 0                          # cot denominator

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.s, self.t, self.n, self.j, self.power)


def pi_atom(power: int = 1) -> Atom:
    if power < 1:
        raise ValueError("pi power must be >= 1")
    return Atom(PI, power=power)


def zeta_atom(s: int) -> Atom:
    if s < 2:
        raise ValueError("Zeta atom requires s >= 2")
    return Atom(ZETA, s=s)


def hurwitz_atom(s: int, t) -> Atom:
    t = Fraction(t)
    if s < 2:
        raise ValueError("HurwitzZeta atom requires s >= 2")
    if not 0 < t < 1:
        raise ValueError("HurwitzZeta atom requires t strictly in (0, 1); "
                         "t = 1 must be rewritten to Zeta(s)")
    return Atom(HURWITZ, s=s, t=t)


def cot_atom(j: int, n: int) -> Atom:
    f = Fraction(j, n)
    if not 0 < f < 1:
        raise ValueError("CotPi atom requires 0 < j/n < 1")
    if f == Fraction(1, 2):
        raise ValueError("cot(pi/2) = 0; the containing term collapses")
    return Atom(COT, j=f.numerator, n=f.denominator)


CATALAN_ATOM = Atom(CATALAN)
SQRT3_ATOM = Atom(SQRT3)


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    atoms: tuple[Atom, ...]


def _normalize(coeff: Fraction, atoms: Iterable[Atom]) -> tuple[Fraction, tuple[Atom, ...]]:
    """Merge pi powers, fold sqrt3 squares into the coefficient, sort."""
    pi_power = 0
    sqrt3_count = 0
    rest: list[Atom] = []
    for a in atoms:
        if a.kind == PI:
            pi_power += a.power
        elif a.kind == SQRT3:
            sqrt3_count += 1
        else:
            rest.append(a)
    coeff = coeff * Fraction(3) ** (sqrt3_count // 2)
    if sqrt3_count % 2:
        rest.append(SQRT3_ATOM)
    if pi_power:
        rest.append(pi_atom(pi_power))
    rest.sort(key=Atom.sort_key)
    return coeff, tuple(rest)


class ConstExpr:
    """Canonical sum of rational-coefficient atom products.

    The empty expression is exact zero.  Instances are immutable in
    practice; all operations return new expressions.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[Atom, ...], Fraction] | None = None):
        self._terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @property
    def terms(self) -> list[Term]:
        return [Term(self._terms[k], k)
                for k in sorted(self._terms, key=lambda k: [a.sort_key() for a in k])]

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        return isinstance(other, ConstExpr) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "ConstExpr") -> "ConstExpr":
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return ConstExpr(out)

    def __neg__(self) -> "ConstExpr":
        return self.scaled(Fraction(-1))

    def __sub__(self, other: "ConstExpr") -> "ConstExpr":
        return self + (-other)

    def scaled(self, c) -> "ConstExpr":
        c = Fraction(c)
        if c == 0:
            return ConstExpr()
        return ConstExpr({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: "ConstExpr") -> "ConstExpr":
        out: dict[tuple[Atom, ...], Fraction] = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                c, key = _normalize(va * vb, ka + kb)
                out[key] = out.get(key, Fraction(0)) + c
        return ConstExpr(out)

    def __repr__(self):
        return f"ConstExpr({render(self, 'plain')})"


def term_expr(coeff, atoms: Iterable[Atom] = ()) -> ConstExpr:
    coeff, key = _normalize(Fraction(coeff), atoms)
    if coeff == 0:
        return ConstExpr()
    return ConstExpr({key: coeff})


ZERO = ConstExpr()


def rational_expr(c) -> ConstExpr:
    return term_expr(Fraction(c))


def pi_expr(power: int = 1) -> ConstExpr:
    return term_expr(1, [pi_atom(power)])


def sqrt3_expr() -> ConstExpr:
    return term_expr(1, [SQRT3_ATOM])


def catalan_expr() -> ConstExpr:
    return term_expr(1, [CATALAN_ATOM])


def zeta_const(s: int) -> ConstExpr:
    """zeta(s) as an expression; s = 0 folds to the exact rational -1/2."""
    if s == 1:
        raise ValueError("zeta(1) is a pole")
    if s == 0:
        return rational_expr(Fraction(-1, 2))
    if s < 0:
        raise ValueError("negative zeta arguments are not supported")
    return term_expr(1, [zeta_atom(s)])


def hurwitz_expr(s: int, t) -> ConstExpr:
    """zeta(s, t) for 0 < t <= 1; t = 1 is rewritten to zeta(s)."""
    t = Fraction(t)
    if t == 1:
        return zeta_const(s)
    return term_expr(1, [hurwitz_atom(s, t)])


def cot_expr(j: int, n: int) -> ConstExpr:
    """cot(pi j/n) for 0 < j < n; j/n = 1/2 yields exact zero."""
    f = Fraction(j, n)
    if not 0 < f < 1:
        raise ValueError("cot_expr requires 0 < j/n < 1")
    if f == Fraction(1, 2):
        return ZERO
    return term_expr(1, [cot_atom(f.numerator, f.denominator)])


# functional aliases for the operator methods
def add(a: ConstExpr, b: ConstExpr) -> ConstExpr:
    return a + b


def scale(a: ConstExpr, c) -> ConstExpr:
    return a.scaled(c)


def mul(a: ConstExpr, b: ConstExpr) -> ConstExpr:
    return a * b


# ---------------------------------------------------------------------------
# numeric evaluation


def _eval_atom(a: Atom, prec: Precision) -> BigFloat:
    if a.kind == PI:
        return numerics.pi_const(prec) ** a.power
    if a.kind == CATALAN:
        return numerics.catalan(prec)
    if a.kind == SQRT3:
        return numerics.sqrt3(prec)
    if a.kind == ZETA:
        return numerics.zeta(a.s, prec)
    if a.kind == HURWITZ:
        return numerics.hurwitz_zeta(a.s, a.t, prec)
    if a.kind == COT:
        return numerics.cot_pi(a.j, a.n, prec)
    raise ValueError(f"unknown atom kind {a.kind!r}")


def eval_numeric(e: ConstExpr, prec: Precision) -> BigFloat:
    """Sum over terms of coeff * product of atom values."""
    with prec.workdps():
        total = mp.mpf(0)
        for term in e.terms:
            v = mp.mpf(term.coeff.numerator) / term.coeff.denominator
            for a in term.atoms:
                v *= _eval_atom(a, prec)
            total += v
        return total


# ---------------------------------------------------------------------------
# rendering and parsing


def _atom_plain(a: Atom) -> str:
    if a.kind == PI:
        return "pi" if a.power == 1 else f"pi^{a.power}"
    if a.kind == CATALAN:
        return "G"
    if a.kind == SQRT3:
        return "sqrt(3)"
    if a.kind == ZETA:
        return f"zeta({a.s})"
    if a.kind == HURWITZ:
        return f"zeta({a.s},{a.t.numerator}/{a.t.denominator})"
    if a.kind == COT:
        return f"cot(pi*{a.j}/{a.n})"
    raise ValueError(a.kind)


def _atom_latex(a: Atom) -> str:
    if a.kind == PI:
        return r"\pi" if a.power == 1 else r"\pi^{%d}" % a.power
    if a.kind == CATALAN:
        return "G"
    if a.kind == SQRT3:
        return r"\sqrt{3}"
    if a.kind == ZETA:
        return r"\zeta(%d)" % a.s
    if a.kind == HURWITZ:
        return r"\zeta(%d,\frac{%d}{%d})" % (a.s, a.t.numerator, a.t.denominator)
    if a.kind == COT:
        return r"\cot(\frac{%d\pi}{%d})" % (a.j, a.n)
    raise ValueError(a.kind)


def _atom_json(a: Atom) -> dict:
    if a.kind == PI:
        return {"kind": "pi", "power": a.power}
    if a.kind == CATALAN:
        return {"kind": "catalan"}
    if a.kind == SQRT3:
        return {"kind": "sqrt3"}
    if a.kind == ZETA:
        return {"kind": "zeta", "s": a.s}
    if a.kind == HURWITZ:
        return {"kind": "hurwitz", "s": a.s,
                "t": f"{a.t.numerator}/{a.t.denominator}"}
    if a.kind == COT:
        return {"kind": "cot", "j": a.j, "n": a.n}
    raise ValueError(a.kind)


def to_json_dict(e: ConstExpr) -> dict:
    return {"terms": [{"coeff": str(t.coeff), "atoms": [_atom_json(a) for a in t.atoms]}
                      for t in e.terms]}


def _atom_from_json(d: dict) -> Atom:
    kind = d["kind"]
    if kind == "pi":
        return pi_atom(int(d["power"]))
    if kind == "catalan":
        return CATALAN_ATOM
    if kind == "sqrt3":
        return SQRT3_ATOM
    if kind == "zeta":
        return zeta_atom(int(d["s"]))
    if kind == "hurwitz":
        return hurwitz_atom(int(d["s"]), Fraction(d["t"]))
    if kind == "cot":
        return cot_atom(int(d["j"]), int(d["n"]))
    raise ValueError(f"unknown atom kind {kind!r}")


def from_json_dict(d: dict) -> ConstExpr:
    out = ZERO
    for t in d["terms"]:
        out = out + term_expr(Fraction(t["coeff"]),
                              [_atom_from_json(a) for a in t["atoms"]])
    return out


def parse_json(text: str) -> ConstExpr:
    return from_json_dict(json.loads(text))


def _coeff_plain(c: Fraction) -> str:
    return str(c)


def render(e: ConstExpr, format: str = "plain") -> str:
    """Deterministic rendering; json round-trips through :func:`parse_json`."""
    if format == "json":
        return json.dumps(to_json_dict(e))
    if e.is_zero():
        return "0"
    if format == "plain":
        parts = []
        for i, t in enumerate(e.terms):
            c = abs(t.coeff)
            body = " * ".join([str(c)] + [_atom_plain(a) for a in t.atoms]) \
                if (c != 1 or not t.atoms) else " * ".join(_atom_plain(a) for a in t.atoms)
            sign = "-" if t.coeff < 0 else "+"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)
    if format == "latex":
        parts = []
        for i, t in enumerate(e.terms):
            c = abs(t.coeff)
            if c.denominator == 1:
                cs = "" if (c == 1 and t.atoms) else str(c.numerator)
            else:
                cs = r"\frac{%d}{%d}" % (c.numerator, c.denominator)
            body = cs + " ".join(_atom_latex(a) for a in t.atoms)
            if i == 0:
                parts.append(body if t.coeff > 0 else "-" + body)
            else:
                parts.append(("+" if t.coeff > 0 else "-") + body)
        return "".join(parts)
    raise ValueError(f"unknown format {format!r}")
