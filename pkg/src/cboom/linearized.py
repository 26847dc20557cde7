"""Root counting for affine trinomials z^(p^k) - A*z - B over GF(p^n).

The closed-form engine evaluates two recurrence quantities alpha_{m-1} and
beta_{m-1} (m = n / gcd(n, k)) and branches on the trichotomy: zero roots,
a unique root, or exactly p^gcd(n,k) roots, in which case the full root set
is produced from a base root plus the kernel line.  Every returned root is
verified by substitution before it leaves this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .field import Field, FieldError


@dataclass(frozen=True)
class TrinomialSpec:
    """z^(p^k) - A*z - B over the given field."""

    field: Field
    k: int
    A: int
    B: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("Frobenius index k must be >= 1")
        self.field.check(self.A)
        self.field.check(self.B)

    @cached_property
    def g(self) -> int:
        return math.gcd(self.field.n, self.k)

    @cached_property
    def m(self) -> int:
        return self.field.n // self.g

    def value_at(self, z: int) -> int:
        f = self.field
        return f.sub(f.sub(f.pow(z, f.p**self.k), f.mul(self.A, z)), self.B)


def trinomial_roots_brute(spec: TrinomialSpec) -> tuple[int, tuple[int, ...]]:
    """Exhaustive scan, the oracle the closed-form engine is checked against."""
    f = spec.field
    zpk = f.pow_all(f.p**spec.k)
    idx = np.arange(f.q)
    rhs = f.add_t[f.mul_t[spec.A][idx], spec.B]
    roots = tuple(int(z) for z in np.nonzero(zpk == rhs)[0])
    return len(roots), roots


def trinomial_roots(spec: TrinomialSpec) -> tuple[int, tuple[int, ...]]:
    """Root count and roots via the alpha/beta recurrences (A != 0).

    m = 1 collapses the recurrences, so that case falls back to the scan.
    """
    f = spec.field
    if spec.A == 0:
        raise ValueError("the engine needs A != 0")
    if spec.m == 1:
        return trinomial_roots_brute(spec)
    p, k, m = f.p, spec.k, spec.m
    pk = p**k
    alpha = f.pow(spec.A, (pk**m - 1) // (pk - 1))
    beta = 0
    for i in range(m):
        s_i = 0 if i == m - 1 else (pk**m - pk ** (i + 1)) // (pk - 1)
        beta = f.add(beta, f.mul(f.pow(spec.A, s_i), f.pow(spec.B, pk**i)))
    if alpha != f.one:
        root = f.mul(beta, f.inv(f.sub(f.one, alpha)))
        roots: tuple[int, ...] = (root,)
    elif beta != 0:
        roots = ()
    else:
        roots = _kernel_line_roots(spec)
    for r in roots:
        if spec.value_at(r) != 0:
            raise AssertionError(f"engine produced a non-root {r} for {spec}")
    return len(roots), tuple(sorted(roots))


def _kernel_line_roots(spec: TrinomialSpec) -> tuple[int, ...]:
    """The p^g roots: a base root plus multiples of a kernel generator tau."""
    f = spec.field
    p, k, g, m = f.p, spec.k, spec.g, spec.m
    pk = p**k
    tau = next((t for t in range(1, f.q) if f.pow(t, pk - 1) == spec.A), None)
    if tau is None:
        raise AssertionError("no (p^k - 1)-th root of A although the kernel is full")
    e = next(e for e in range(1, f.q) if f.trace_rel(e, g) != 0)
    tr_inv = f.inv(f.trace_rel(e, g))
    acc = 0
    e_partial = 0
    for i in range(m):
        e_partial = f.add(e_partial, f.pow(e, pk**i))
        # t_i = p^(k(i+1)) + ... + p^(k(m-1)), the tail geometric sum
        t_i = (pk**m - pk ** (i + 1)) // (pk - 1)
        term = f.mul(e_partial, f.mul(f.pow(spec.A, t_i), f.pow(spec.B, pk**i)))
        acc = f.add(acc, term)
    base = f.mul(tr_inv, acc)
    return tuple(f.add(base, f.mul(int(d), tau)) for d in f.subfield_elements(g))


def delta_d(field: Field, k: int, d: int) -> int:
    """Number of roots of z^(p^k) + z + d, engine and scan cross-checked."""
    spec = TrinomialSpec(field, k, field.neg(field.one), field.neg(d))
    count, _ = trinomial_roots(spec)
    brute_count, _ = trinomial_roots_brute(spec)
    if count != brute_count:
        raise AssertionError(
            f"trinomial engine disagrees with the scan: {count} vs {brute_count} for {spec}"
        )
    return count
