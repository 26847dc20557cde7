"""Multiplier-difference tables: c-derivatives, c-DDT, uniformity classes.

The table entry at (a, b) counts solutions x of F(x+a) - c*F(x) = b.  Every
row sums to the field size.  The multiplier c = 0 is allowed here (it turns
rows into shifted preimage counts); only boomerang tables reject it.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass

import numpy as np

from .field import Field
from .functions import FunctionTable, comp_inverse, monomial
from .verdict import TheoremVerdict


@dataclass
class CountTable:
    """A q x q table of nonnegative counts, tagged with its provenance."""

    kind: str  # "DDT" or "BCT"
    c: int
    field: Field
    function_label: str
    entries: np.ndarray  # shape (q, q), rows indexed by a, columns by b

    def __post_init__(self):
        q = self.field.q
        if self.entries.shape != (q, q):
            raise ValueError("count table must be q x q")
        if self.entries.min() < 0:
            raise ValueError("negative count")
        if self.kind == "DDT" and not (self.entries.sum(axis=1) == q).all():
            raise ValueError("DDT row sums must equal the field size")
        if self.kind == "BCT" and self.entries.max() > q * q:
            raise ValueError("BCT entry exceeds q^2")

    def max_entry(self, nonzero_a: bool = False, nonzero_b: bool = False) -> int:
        sub = self.entries[1 if nonzero_a else 0:, 1 if nonzero_b else 0:]
        return int(sub.max())

    def to_json(self) -> str:
        return json.dumps(
            {
                "kind": self.kind,
                "c": self.field.el_str(self.c),
                "function": self.function_label,
                "field": self.field.spec_dict(),
                "entries": self.entries.tolist(),
            },
            sort_keys=True,
        )

    def to_csv(self) -> str:
        out = io.StringIO()
        for a in range(self.field.q):
            row = ",".join(str(int(v)) for v in self.entries[a])
            out.write(f"{self.field.el_str(a)},{row}\n")
        return out.getvalue()


def c_derivative(F: FunctionTable, c: int, a: int) -> FunctionTable:
    """The map x -> F(x+a) - c*F(x)."""
    field = F.field
    vals = field.sub_t[F.values[field.add_t[a]], field.mul_t[c][F.values]]
    return FunctionTable(field, vals, f"D[{field.el_str(a)};c={field.el_str(c)}]({F.label})")


def c_ddt(F: FunctionTable, c: int) -> CountTable:
    """Full difference table for multiplier c."""
    field = F.field
    q = field.q
    cF = field.mul_t[c][F.values]
    ent = np.empty((q, q), dtype=np.int64)
    for a in range(q):
        ent[a] = np.bincount(field.sub_t[F.values[field.add_t[a]], cF], minlength=q)
    return CountTable("DDT", c, field, F.label, ent)


def ddt_brute(F: FunctionTable, c: int) -> np.ndarray:
    """Straightforward double-loop table, kept independent for cross-checks."""
    field = F.field
    q = field.q
    ent = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for x in range(q):
            b = field.sub(F(field.add(x, a)), field.mul(c, F(x)))
            ent[a][b] += 1
    return ent


def c_diff_uniformity(F: FunctionTable, c: int) -> int:
    """Max table entry; the a = 0 row is excluded only when c = 1."""
    table = c_ddt(F, c)
    return table.max_entry(nonzero_a=(c == F.field.one))


def classify_pcn(F: FunctionTable, c: int) -> str:
    """'PcN', 'APcN', or the observed uniformity as '<d>-uniform'."""
    d = c_diff_uniformity(F, c)
    if d == 1:
        return "PcN"
    if d == 2:
        return "APcN"
    return f"{d}-uniform"


def monomial_inverse_ddt_check(field: Field, d: int, c: int) -> TheoremVerdict:
    """For a permutation monomial F = x^d, the inverse function's difference
    table is a relabeling of F's own at multiplier c^-d:
    table_{F^-1, c}(a, b) = table_{F, c^-d}(b*c^-1, -a*c^-d), checked cellwise.
    """
    import math

    if c == 0:
        raise ValueError("multiplier c must be nonzero")
    if math.gcd(d, field.q - 1) != 1:
        raise ValueError(f"x^{d} is not a permutation of GF({field.p}^{field.n})")
    F = monomial(field, d)
    lhs = c_ddt(comp_inverse(F), c).entries
    cmd = field.pow(c, -d)
    rhs_table = c_ddt(F, cmd).entries
    cinv = field.inv(c)
    mism = []
    for a in range(field.q):
        for b in range(field.q):
            want = rhs_table[field.mul(b, cinv), field.mul(field.neg(a), cmd)]
            if lhs[a, b] != want:
                mism.append([field.el_str(a), field.el_str(b),
                             int(lhs[a, b]), int(want)])
    return TheoremVerdict(
        theorem="monomial-inverse-ddt",
        params={"p": field.p, "n": field.n, "d": d, "c": field.el_str(c)},
        passed=not mism,
        witnesses=mism[:5],
        notes="" if not mism else f"{len(mism)} mismatched cells",
    )
