"""Exact arithmetic in GF(p^n) over a polynomial basis.

An element is an integer index in [0, p^n): base-p digit i of the index is
the coefficient of alpha^i, where alpha is the residue class of x modulo
the construction polynomial.  The dense integer encoding keeps every table
flat and makes serialized output bit-exact.

Fields up to TABLE_LIMIT elements carry eagerly built numpy lookup tables
(addition, multiplication via log/antilog, trace); larger fields fall back
to scalar digit/polynomial arithmetic.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

TABLE_LIMIT = 4096

# Bundled construction polynomials, constant term first.  Only these (p, n)
# pairs get a default modulus; anything else must be given explicitly.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),            # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),         # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),      # x^4 + x + 1
    (3, 2): (2, 2, 1),            # x^2 + 2x + 2
    (3, 3): (1, 2, 0, 1),         # x^3 + 2x + 1
    (3, 4): (2, 0, 0, 2, 1),      # x^4 + 2x^3 + 2
    (3, 5): (1, 2, 0, 0, 0, 1),   # x^5 + 2x + 1
    (5, 2): (2, 4, 1),            # x^2 + 4x + 2
    (5, 3): (3, 3, 0, 1),         # x^3 + 3x + 3
    (5, 4): (2, 4, 4, 0, 1),      # x^4 + 4x^2 + 4x + 2
}

# Recorded choice for binary degree 5, which has no bundled default.
# x^5 + x^2 + 1 is primitive over GF(2).
BINARY_DEGREE5_MODULUS: tuple[int, ...] = (1, 0, 1, 0, 0, 1)

_SMALL_PRIMES = frozenset((2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31))


class FieldError(ValueError):
    """Invalid field specification or element operation."""


def _factorize(m: int) -> list[int]:
    """Distinct prime factors of m, by trial division."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


# -- dense polynomials over Z_p, coefficient lists low degree first --------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = list(a)
    finv = pow(f[-1], -1, p)
    while len(a) >= len(f):
        c = a[-1] * finv % p
        if c:
            off = len(a) - len(f)
            for i, fi in enumerate(f):
                a[off + i] = (a[off + i] - c * fi) % p
        a.pop()
    return _ptrim(a)


def _ppowmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    acc = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, acc, p), f, p)
        acc = _pmod(_pmul(acc, acc, p), f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _minus_x(h: list[int], p: int) -> list[int]:
    h = h + [0] * max(0, 2 - len(h))
    return _ptrim([(c - (1 if i == 1 else 0)) % p for i, c in enumerate(h)])


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Rabin test: x^(p^n) = x mod f, plus gcd checks at maximal subfields."""
    f = list(modulus)
    n = len(f) - 1
    if n == 1:
        return True
    x = [0, 1]
    if _minus_x(_ppowmod(x, p**n, f, p), p):
        return False
    for r in _factorize(n):
        diff = _minus_x(_ppowmod(x, p ** (n // r), f, p), p)
        g = _pgcd(f, diff, p)
        if len(g) - 1 != 0:
            return False
    return True


class Field:
    """GF(p^n) in a polynomial basis, with flat integer element indices."""

    def __init__(self, p: int, n: int, modulus=None, generator: int | None = None):
        if p not in _SMALL_PRIMES:
            raise FieldError(f"p must be a prime <= 31, got {p}")
        if not 1 <= n <= 8:
            raise FieldError(f"extension degree must be in [1, 8], got {n}")
        if modulus is None:
            try:
                modulus = DEFAULT_MODULI[(p, n)]
            except KeyError:
                raise FieldError(
                    f"no bundled modulus for (p={p}, n={n}); pass one explicitly"
                ) from None
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1:
            raise FieldError(f"modulus needs {n + 1} coefficients, got {len(modulus)}")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if not _is_irreducible(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over Z_{p}")
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        self.alpha = self._reduce_x()
        self._has_add_t = False
        self._has_mul_t = False
        self._sqrt_t = None
        self._as_t = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()
            self._setup_generator(generator)
        elif generator is not None:
            self.generator = int(generator)
            self._check_order(self.generator)
        else:
            self.generator = None

    # -- construction helpers ----------------------------------------------

    def _reduce_x(self) -> int:
        if self.n >= 2:
            return self.p
        return (-self.modulus[0]) % self.p

    def _build_tables(self) -> None:
        p, n, q = self.p, self.n, self.q
        idx = np.arange(q, dtype=np.int64)
        digs = np.empty((q, n), dtype=np.int64)
        t = idx.copy()
        for i in range(n):
            digs[:, i] = t % p
            t //= p
        self.digits = digs
        pw = p ** np.arange(n, dtype=np.int64)
        self.neg_t = (((-digs) % p) * pw).sum(axis=1).astype(np.int32)
        # addition, built in row chunks to bound the intermediate
        add_t = np.empty((q, q), dtype=np.int32)
        chunk = max(1, (1 << 22) // (q * n))
        for lo in range(0, q, chunk):
            hi = min(q, lo + chunk)
            s = (digs[lo:hi, None, :] + digs[None, :, :]) % p
            add_t[lo:hi] = (s * pw).sum(axis=2)
        self.add_t = add_t
        self.sub_t = add_t[:, self.neg_t]
        # multiplication by alpha: shift digits, fold the overflow back in
        mod = np.asarray(self.modulus[:n], dtype=np.int64)
        shifted = np.zeros((q, n), dtype=np.int64)
        shifted[:, 1:] = digs[:, : n - 1]
        top = digs[:, n - 1]
        self.mulx_t = (((shifted - top[:, None] * mod) % p) * pw).sum(axis=1).astype(np.int32)
        self._has_add_t = True

    def _setup_generator(self, generator: int | None) -> None:
        q = self.q
        if generator is None:
            generator = self.alpha if self._order_is_full(self.alpha) else None
            if generator is None:
                for g in range(2, q):
                    if self._order_is_full(g):
                        generator = g
                        break
        else:
            generator = int(generator)
            self._check_order(generator)
        self.generator = generator
        # log/antilog chain drives multiplication
        exp_t = np.empty(q - 1, dtype=np.int32)
        mulg = self._mul_by_table(generator)
        acc = 1
        for i in range(q - 1):
            exp_t[i] = acc
            acc = int(mulg[acc])
        if acc != 1:
            raise FieldError("generator order check failed")
        log_t = np.empty(q, dtype=np.int64)
        log_t[0] = -1
        log_t[exp_t] = np.arange(q - 1)
        self.exp_t = exp_t
        self.log_t = log_t
        outer = (log_t[1:, None] + log_t[None, 1:]) % (q - 1)
        mul_t = np.zeros((q, q), dtype=np.int32)
        mul_t[1:, 1:] = exp_t[outer]
        self.mul_t = mul_t
        inv_t = np.zeros(q, dtype=np.int32)
        inv_t[1:] = exp_t[(-log_t[1:]) % (q - 1)]
        self.inv_t = inv_t
        self._has_mul_t = True
        # trace of every element, as an integer in [0, p)
        frob = self.pow_all(self.p)
        acc = np.arange(q, dtype=np.int32)
        tr = acc.copy()
        for _ in range(self.n - 1):
            acc = frob[acc]
            tr = self.add_t[tr, acc]
        if tr.max() >= self.p:
            raise FieldError("trace landed outside the prime subfield")
        self.trace_t = tr.astype(np.int8)

    def _mul_by_table(self, g: int) -> np.ndarray:
        """Vector of g*x for all x, from the alpha-shift table."""
        q, n, p = self.q, self.n, self.p
        basis = np.empty(n, dtype=np.int64)
        acc = g
        for i in range(n):
            basis[i] = acc
            acc = int(self.mulx_t[acc])
        out = np.zeros(q, dtype=np.int32)
        for i in range(n):
            term = np.zeros(q, dtype=np.int32)
            cur = np.full(q, int(basis[i]), dtype=np.int32)
            d = self.digits[:, i]
            for rep in range(p - 1):
                term = np.where(d > rep, self.add_t[term, cur], term)
            out = self.add_t[out, term]
        return out

    def _order_is_full(self, g: int) -> bool:
        if g == 0:
            return False
        m = self.q - 1
        return all(self._scalar_pow(g, m // r) != 1 for r in _factorize(m)) if m > 1 else True

    def _check_order(self, g: int) -> None:
        if not self._order_is_full(g):
            raise FieldError(f"element {g} does not have multiplicative order {self.q - 1}")

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Field)
                and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus))

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    def __repr__(self) -> str:
        return f"Field(p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    def spec_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    # -- scalar arithmetic on element indices ---------------------------------

    def _digits_of(self, x: int) -> list[int]:
        out = []
        for _ in range(self.n):
            out.append(x % self.p)
            x //= self.p
        return out

    def _index_of(self, digs) -> int:
        out = 0
        for c in reversed(list(digs)):
            out = out * self.p + (c % self.p)
        return out

    def check(self, x: int) -> int:
        x = int(x)
        if not 0 <= x < self.q:
            raise FieldError(f"element index {x} out of range for GF({self.p}^{self.n})")
        return x

    def add(self, x: int, y: int) -> int:
        if self._has_add_t:
            return int(self.add_t[x, y])
        a, b = self._digits_of(x), self._digits_of(y)
        return self._index_of((ai + bi) % self.p for ai, bi in zip(a, b))

    def neg(self, x: int) -> int:
        if self._has_add_t:
            return int(self.neg_t[x])
        return self._index_of((-d) % self.p for d in self._digits_of(x))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self._has_mul_t:
            return int(self.mul_t[x, y])
        prod = _pmod(_pmul(_ptrim(self._digits_of(x)), _ptrim(self._digits_of(y)), self.p),
                     list(self.modulus), self.p)
        return self._index_of(prod + [0] * (self.n - len(prod)))

    def inv(self, x: int) -> int:
        if x == 0:
            raise FieldError("0 has no multiplicative inverse")
        if self._has_mul_t:
            return int(self.inv_t[x])
        return self._scalar_pow(x, self.q - 2)

    def _scalar_pow(self, x: int, e: int) -> int:
        result, acc = 1, x
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result

    def pow(self, x: int, e: int) -> int:
        """x**e; exponents reduce mod q-1 for nonzero x, and 0**0 = 1."""
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldError("0 cannot be raised to a negative power")
            return 0
        e %= self.q - 1
        if self._has_mul_t:
            return int(self.exp_t[(self.log_t[x] * e) % (self.q - 1)])
        return self._scalar_pow(x, e)

    def element(self, coeffs) -> int:
        """Element index from a coefficient list, constant term first."""
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            raise FieldError("too many coefficients")
        return self._index_of(coeffs + [0] * (self.n - len(coeffs)))

    def coeffs(self, x: int) -> tuple[int, ...]:
        return tuple(self._digits_of(self.check(x)))

    def from_int(self, v: int) -> int:
        """Image of the rational integer v in the prime subfield."""
        return v % self.p

    # -- derived maps ----------------------------------------------------------

    def trace(self, x: int) -> int:
        if self._has_mul_t:
            return int(self.trace_t[x])
        acc, cur = x, x
        for _ in range(self.n - 1):
            cur = self.pow(cur, self.p)
            acc = self.add(acc, cur)
        return acc  # lies in the prime subfield, index equals value

    def trace_rel(self, x: int, g: int) -> int:
        """Relative trace onto the subfield GF(p^g); g must divide n."""
        if g <= 0 or self.n % g != 0:
            raise FieldError(f"{g} does not divide the extension degree {self.n}")
        acc, cur = x, x
        for _ in range(self.n // g - 1):
            cur = self.pow(cur, self.p**g)
            acc = self.add(acc, cur)
        return acc

    def frobenius(self, x: int, k: int) -> int:
        if k < 0:
            raise FieldError("Frobenius index must be nonnegative")
        return self.pow(x, self.p**k)

    def is_square(self, x: int) -> bool:
        if self.p == 2 or x == 0:
            return True
        return self.pow(x, (self.q - 1) // 2) == 1

    def sqrt(self, x: int) -> int:
        """One square root of x (p odd; raises if x is not a square)."""
        if self.p == 2:
            return self.pow(x, self.q // 2)  # squaring is bijective
        if self._sqrt_t is None:
            t = np.full(self.q, -1, dtype=np.int64)
            sq = self.mul_t[np.arange(self.q), np.arange(self.q)]
            for y in range(self.q - 1, -1, -1):
                t[sq[y]] = y
            self._sqrt_t = t
        r = int(self._sqrt_t[x])
        if r < 0:
            raise FieldError(f"{x} is not a square")
        return r

    def chebyshev(self, ell: int, w: int) -> int:
        """First-kind Chebyshev value T_ell(w) by the three-term recurrence."""
        if ell < 0:
            raise FieldError("Chebyshev index must be nonnegative")
        prev = self.from_int(2)
        if ell == 0:
            return prev
        cur = w
        for _ in range(ell - 1):
            prev, cur = cur, self.sub(self.mul(w, cur), prev)
        return cur

    def chebyshev_all(self, ell: int) -> np.ndarray:
        """T_ell at every field element, as one vector."""
        idx = np.arange(self.q)
        prev = np.full(self.q, self.from_int(2), dtype=np.int32)
        if ell == 0:
            return prev
        cur = idx.astype(np.int32)
        for _ in range(ell - 1):
            prev, cur = cur, self.sub_t[self.mul_t[idx, cur], prev]
        return cur

    def solve_quadratic(self, a1: int, a0: int) -> tuple[int, ...]:
        """Distinct roots of x^2 + a1*x + a0 = 0, sorted by index."""
        if self.p == 2:
            if a1 == 0:
                roots = (self.sqrt(a0),)  # x^2 = a0, squaring bijective
            else:
                t = self.mul(a0, self.inv(self.mul(a1, a1)))
                if self.trace(t) != 0:
                    roots = ()
                else:
                    y = self.artin_schreier_root(t)
                    roots = tuple(sorted((self.mul(a1, y), self.mul(a1, self.add(y, 1)))))
        else:
            disc = self.sub(self.mul(a1, a1), self.mul(self.from_int(4), a0))
            half = self.inv(self.from_int(2))
            if disc == 0:
                roots = (self.mul(self.neg(a1), half),)
            elif not self.is_square(disc):
                roots = ()
            else:
                s = self.sqrt(disc)
                roots = tuple(sorted((self.mul(self.sub(s, a1), half),
                                      self.mul(self.sub(self.neg(s), a1), half))))
        for r in roots:
            if self.add(self.mul(r, r), self.add(self.mul(a1, r), a0)) != 0:
                raise FieldError("quadratic root failed substitution")
        return roots

    def artin_schreier_root(self, t: int) -> int:
        """Some y with y^p - y = t; raises if the trace obstruction holds."""
        y = self.hilbert90(t)
        if y is None:
            raise FieldError("no Artin-Schreier root: trace is nonzero")
        return y

    def hilbert90(self, x: int) -> int | None:
        """A witness y with y^p - y = x when trace(x) = 0, else None."""
        if self._as_t is None:
            t = np.full(self.q, -1, dtype=np.int64)
            idx = np.arange(self.q, dtype=np.int32)
            img = self.sub_t[self.pow_all(self.p), idx]
            for y in range(self.q - 1, -1, -1):
                t[img[y]] = y
            self._as_t = t
        y = int(self._as_t[x])
        return None if y < 0 else y

    def pow_all(self, e: int) -> np.ndarray:
        """Vector of x**e over the whole field (e >= 0; 0**0 = 1)."""
        if e < 0:
            raise FieldError("pow_all requires a nonnegative exponent")
        q = self.q
        out = np.zeros(q, dtype=np.int32)
        if e == 0:
            out[:] = 1
            return out
        er = e % (q - 1)
        if er == 0:
            out[1:] = 1
        else:
            out[1:] = self.exp_t[(self.log_t[1:] * er) % (q - 1)]
        return out

    def elements(self) -> range:
        return range(self.q)

    def subfield_elements(self, g: int) -> np.ndarray:
        """Indices of the GF(p^g) subfield (fixed points of Frobenius^g)."""
        if g <= 0 or self.n % g != 0:
            raise FieldError(f"{g} does not divide the extension degree {self.n}")
        fix = self.pow_all(self.p**g)
        return np.nonzero(fix == np.arange(self.q))[0]

    def squares_mask(self) -> np.ndarray:
        idx = np.arange(self.q)
        mask = np.zeros(self.q, dtype=bool)
        mask[self.mul_t[idx, idx]] = True
        return mask

    # -- text form -------------------------------------------------------------

    def el_str(self, x: int) -> str:
        """Canonical literal: ascending powers of a, explicit coefficients."""
        self.check(x)
        terms = []
        for i, c in enumerate(self._digits_of(x)):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                atom = "a" if i == 1 else f"a^{i}"
                terms.append(atom if c == 1 else f"{c}*{atom}")
        return " + ".join(terms) if terms else "0"

    def parse_el(self, text: str) -> int:
        return parse_element(self, text)

    def el(self, x: int) -> "FieldElement":
        return FieldElement(self, self.check(x))


_EL_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+)\s*(?:\*?\s*(?P<atom1>(?:alpha|a)(?:\^(?P<exp1>\d+))?))?
          | (?P<atom2>(?:alpha|a)(?:\^(?P<exp2>\d+))?)
        )\s*""",
    re.VERBOSE,
)


def parse_element(field: Field, text: str) -> int:
    """Parse an element literal like '2 + a^3' or '2*a' to its index."""
    s = text.strip()
    if not s:
        raise FieldError("empty element literal")
    pos = 0
    acc = 0
    first = True
    while pos < len(s):
        m = _EL_TERM.match(s, pos)
        if not m or m.end() == pos:
            raise FieldError(f"bad element literal {text!r} at position {pos}")
        if not first and m.group("sign") is None:
            raise FieldError(f"missing +/- in element literal {text!r} at position {pos}")
        c = int(m.group("coef")) % field.p if m.group("coef") is not None else 1
        if m.group("sign") == "-":
            c = (-c) % field.p
        atom = m.group("atom1") or m.group("atom2")
        if atom is not None:
            exp = m.group("exp1") or m.group("exp2")
            e = int(exp) if exp is not None else 1
            term = field.mul(field.from_int(c), field.pow(field.alpha, e))
        else:
            term = field.from_int(c)
        acc = field.add(acc, term)
        pos = m.end()
        first = False
    return acc


def parse_field_spec(spec) -> Field:
    """Build a Field from 'p=3,n=2[,modulus=[2,2,1]][,generator=3]' or a mapping."""
    if isinstance(spec, Field):
        return spec
    if isinstance(spec, str):
        data: dict = {}
        body = spec.strip()
        mmod = re.search(r"modulus\s*=\s*\[([^\]]*)\]", body)
        if mmod:
            data["modulus"] = [int(v) for v in mmod.group(1).split(",") if v.strip()]
            body = body[: mmod.start()] + body[mmod.end():]
        for part in body.split(","):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise FieldError(f"bad field spec fragment {part!r}")
            key, val = (t.strip() for t in part.split("=", 1))
            if key in ("p", "n", "generator"):
                data[key] = int(val)
            else:
                raise FieldError(f"unknown field spec key {key!r}")
        spec = data
    if not isinstance(spec, dict):
        raise FieldError(f"cannot parse field spec from {type(spec).__name__}")
    if "p" not in spec or "n" not in spec:
        raise FieldError("field spec must name p and n")
    return Field(int(spec["p"]), int(spec["n"]),
                 modulus=spec.get("modulus"), generator=spec.get("generator"))


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific Field; arithmetic checks field agreement."""

    field: Field
    index: int

    def _peer(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("elements belong to different fields")
            return other.index
        if isinstance(other, int):
            return self.field.check(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.index, self._peer(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.index, self._peer(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.index, self._peer(other)))

    def __truediv__(self, other):
        return FieldElement(self.field,
                            self.field.mul(self.index, self.field.inv(self._peer(other))))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def __str__(self) -> str:
        return self.field.el_str(self.index)

    def __repr__(self) -> str:
        return f"<{self.field.el_str(self.index)} in GF({self.field.p}^{self.field.n})>"


# -- operation-style wrappers over FieldElement --------------------------------

def fe_add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def fe_sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def fe_neg(x: FieldElement) -> FieldElement:
    return -x


def fe_mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def fe_inv(x: FieldElement) -> FieldElement:
    return FieldElement(x.field, x.field.inv(x.index))


def fe_pow(x: FieldElement, e: int) -> FieldElement:
    return x**e


def trace_abs(x: FieldElement) -> int:
    return x.field.trace(x.index)


def trace_rel(x: FieldElement, g: int) -> FieldElement:
    return FieldElement(x.field, x.field.trace_rel(x.index, g))


def frobenius(x: FieldElement, k: int) -> FieldElement:
    return FieldElement(x.field, x.field.frobenius(x.index, k))


def is_square(x: FieldElement) -> bool:
    return x.field.is_square(x.index)


def chebyshev_T(ell: int, w: FieldElement) -> FieldElement:
    return FieldElement(w.field, w.field.chebyshev(ell, w.index))


def solve_quadratic(a1: FieldElement, a0: FieldElement) -> tuple[FieldElement, ...]:
    if a1.field != a0.field:
        raise FieldError("coefficients belong to different fields")
    return tuple(FieldElement(a1.field, r)
                 for r in a1.field.solve_quadratic(a1.index, a0.index))


def hilbert90_witness(x: FieldElement) -> FieldElement | None:
    y = x.field.hilbert90(x.index)
    return None if y is None else FieldElement(x.field, y)


def gcd_formula(p: int, k: int, n: int) -> int:
    """gcd(p^k + 1, p^n - 1) by Euclid, asserted against the closed form."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    g = math.gcd(p**k + 1, p**n - 1)
    if p == 2:
        closed = (2 ** math.gcd(2 * k, n) - 1) // (2 ** math.gcd(k, n) - 1)
    elif (n // math.gcd(n, k)) % 2 == 1:
        closed = 2
    else:
        closed = p ** math.gcd(k, n) + 1
    if g != closed:
        raise AssertionError(f"gcd closed form mismatch: euclid={g}, closed={closed}")
    return g
