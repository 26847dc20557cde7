"""(n,n)-functions over GF(p^n): expression parsing, value tables, families.

Functions are stored extensionally as value tables indexed by element; the
expression form exists for input/output and round-tripping.  Field sizes in
scope are small enough that tables are always the right representation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .field import Field, FieldError, parse_element


class ParseError(ValueError):
    """Expression rejected, with a position in the message."""


@dataclass(frozen=True)
class FunctionExpr:
    """Normalized univariate polynomial: (exponent, coefficient) pairs."""

    field: Field
    terms: tuple[tuple[int, int], ...]  # sorted by exponent, zero coeffs dropped

    def __str__(self) -> str:
        return expr_str(self)


class FunctionTable:
    """An (n,n)-function as an exhaustive value table."""

    def __init__(self, field: Field, values, label: str = ""):
        self.field = field
        vals = np.asarray(values, dtype=np.int32)
        if vals.shape != (field.q,):
            raise ValueError(f"value table must have length {field.q}")
        if vals.min() < 0 or vals.max() >= field.q:
            raise ValueError("value out of field range")
        self.values = vals
        self.values.setflags(write=False)
        self.label = label or "F"

    @cached_property
    def is_perm(self) -> bool:
        return len(np.unique(self.values)) == self.field.q

    def __call__(self, x: int) -> int:
        return int(self.values[x])

    def __eq__(self, other) -> bool:
        return (isinstance(other, FunctionTable)
                and self.field == other.field
                and np.array_equal(self.values, other.values))

    def __hash__(self) -> int:
        return hash((self.field, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"FunctionTable({self.label!r} over GF({self.field.p}^{self.field.n}))"

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.spec_dict(),
            "label": self.label,
            "is_perm": self.is_perm,
            "values": [int(v) for v in self.values],
        }


_FUNC_TOKEN = re.compile(
    r"""(?P<ws>\s+)
      | (?P<sign>[+-])
      | (?P<star>\*)
      | (?P<paren>\([^()]*\))
      | (?P<xpow>x(?:\^(?P<exp>\d+))?)
      | (?P<inv>inv\b)
      | (?P<atom>(?:alpha|a)(?:\^\d+)?)
      | (?P<int>\d+)
    """,
    re.VERBOSE,
)


def parse_function(text: str, field: Field) -> FunctionExpr:
    """Parse a sum of terms like 'coef*x^e', 'x', '2', or 'inv'.

    Coefficients are element literals over a (parenthesize sums); exponents
    must stay below p^n -- reduction by x^(p^n) = x is never applied silently.
    """
    tokens = []
    pos = 0
    s = text
    while pos < len(s):
        m = _FUNC_TOKEN.match(s, pos)
        if not m:
            raise ParseError(f"syntax error at position {pos} in {text!r}")
        if not m.group("ws"):
            tokens.append((m.lastgroup, m, pos))
        pos = m.end()
    if not tokens:
        raise ParseError("empty expression")

    coeffs: dict[int, int] = {}
    i = 0
    while i < len(tokens):
        sign = 1
        kind, m, at = tokens[i]
        if kind == "sign":
            sign = -1 if m.group("sign") == "-" else 1
            i += 1
            if i >= len(tokens):
                raise ParseError(f"dangling sign at position {at} in {text!r}")
        elif coeffs or i > 0:
            raise ParseError(f"expected + or - at position {at} in {text!r}")
        coef = 1
        exp = None
        saw_factor = False
        expect_factor = True
        while i < len(tokens):
            kind, m, at = tokens[i]
            if kind == "sign":
                break
            if kind == "star":
                if not saw_factor:
                    raise ParseError(f"misplaced '*' at position {at} in {text!r}")
                expect_factor = True
                i += 1
                continue
            if not expect_factor:
                raise ParseError(f"missing '*' before position {at} in {text!r}")
            if kind == "paren":
                try:
                    val = parse_element(field, m.group("paren")[1:-1])
                except FieldError as exc:
                    raise ParseError(f"{exc} (at position {at} in {text!r})") from None
                coef = field.mul(coef, val)
            elif kind == "int":
                coef = field.mul(coef, field.from_int(int(m.group("int"))))
            elif kind == "atom":
                try:
                    val = parse_element(field, m.group("atom"))
                except FieldError as exc:
                    raise ParseError(f"{exc} (at position {at} in {text!r})") from None
                coef = field.mul(coef, val)
            elif kind == "xpow":
                if exp is not None:
                    raise ParseError(f"two x-powers in one term at position {at} in {text!r}")
                exp = int(m.group("exp")) if m.group("exp") else 1
            elif kind == "inv":
                if exp is not None:
                    raise ParseError(f"two x-powers in one term at position {at} in {text!r}")
                exp = field.q - 2
            else:  # pragma: no cover
                raise ParseError(f"unexpected token at position {at} in {text!r}")
            saw_factor = True
            expect_factor = False
            i += 1
        if not saw_factor:
            raise ParseError(f"empty term at position {at} in {text!r}")
        if exp is None:
            exp = 0
        if exp >= field.q:
            raise ParseError(
                f"exponent {exp} out of range (must be < {field.q}); reduce it first"
            )
        if sign == -1:
            coef = field.neg(coef)
        coeffs[exp] = field.add(coeffs.get(exp, 0), coef)

    terms = tuple(sorted((e, c) for e, c in coeffs.items() if c != 0))
    return FunctionExpr(field, terms)


def _coef_str(field: Field, c: int, leading: bool) -> str:
    lit = field.el_str(c)
    if ("+" in lit or lit.startswith("-")) or (not leading and "*" in lit):
        return f"({lit})"
    return lit


def expr_str(expr: FunctionExpr) -> str:
    """Canonical text form, descending exponents."""
    field = expr.field
    if not expr.terms:
        return "0"
    parts = []
    for e, c in sorted(expr.terms, reverse=True):
        if e == 0:
            parts.append(_coef_str(field, c, False))
            continue
        xpart = "x" if e == 1 else f"x^{e}"
        if c == 1:
            parts.append(xpart)
        else:
            parts.append(f"{_coef_str(field, c, True)}*{xpart}")
    return " + ".join(parts)


def tabulate(expr: FunctionExpr, label: str | None = None) -> FunctionTable:
    """Evaluate an expression at every field element."""
    field = expr.field
    acc = np.zeros(field.q, dtype=np.int32)
    for e, c in expr.terms:
        term = field.pow_all(e)
        if c != 1:
            term = field.mul_t[c][term]
        acc = field.add_t[acc, term]
    return FunctionTable(field, acc, label or expr_str(expr))


def monomial(field: Field, d: int, label: str | None = None) -> FunctionTable:
    """The power map x -> x^d as a table (d >= 0, reduced pointwise)."""
    if d < 0:
        raise ValueError("monomial exponent must be nonnegative")
    return FunctionTable(field, field.pow_all(d), label or (f"x^{d}" if d != 1 else "x"))


def family(name: str, field: Field, k: int | None = None, u: int | None = None) -> FunctionTable:
    """Named builders: square, gold, half_gold, dob, inverse."""
    if name == "square":
        return monomial(field, 2)
    if name == "gold":
        if k is None or k < 1:
            raise ValueError("gold needs a Frobenius index k >= 1")
        return monomial(field, field.p**k + 1)
    if name == "half_gold":
        if field.p != 3:
            raise ValueError("half_gold is defined over characteristic 3 only")
        if k is None or k < 1:
            raise ValueError("half_gold needs a Frobenius index k >= 1")
        return monomial(field, (3**k + 1) // 2)
    if name == "dob":
        if field.p != 3:
            raise ValueError("dob is defined over characteristic 3 only")
        if u is None:
            raise ValueError("dob needs the parameter u")
        u = field.check(u)
        c6 = field.neg(u)
        c2 = field.neg(field.mul(u, u))
        vals = field.pow_all(10)
        vals = field.add_t[vals, field.mul_t[c6][field.pow_all(6)]]
        vals = field.add_t[vals, field.mul_t[c2][field.pow_all(2)]]
        return FunctionTable(field, vals, f"x^10 - u*x^6 - u^2*x^2 (u={field.el_str(u)})")
    if name == "inverse":
        return monomial(field, field.q - 2)
    raise ValueError(f"unknown family {name!r}")


def comp_inverse(F: FunctionTable) -> FunctionTable:
    """Compositional inverse of a permutation table."""
    if not F.is_perm:
        raise ValueError(f"{F.label} is not a permutation")
    q = F.field.q
    inv = np.empty(q, dtype=np.int32)
    inv[F.values] = np.arange(q, dtype=np.int32)
    return FunctionTable(F.field, inv, f"({F.label})^-1")


def _classical_uniformity(F: FunctionTable) -> int:
    """Classical differential uniformity, max over a != 0 (plain route)."""
    field = F.field
    best = 0
    for a in range(1, field.q):
        row = np.bincount(field.sub_t[F.values[field.add_t[a]], F.values],
                          minlength=field.q)
        best = max(best, int(row.max()))
    return best


def is_pn(F: FunctionTable) -> bool:
    return _classical_uniformity(F) == 1


def is_apn(F: FunctionTable) -> bool:
    return _classical_uniformity(F) == 2
