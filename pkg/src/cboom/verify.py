"""Machine verification of the structural statements about named families.

Each verifier recomputes boomerang/difference quantities from the table
modules rather than trusting anything cached, and returns a TheoremVerdict
whose witnesses revalidate.  Where a printed formula is checkable in two
variants (a statement/derivation discrepancy), both are evaluated and the
verdict records which one survives.
"""

from __future__ import annotations

import math

import numpy as np

from .field import Field
from .functions import FunctionTable, family, monomial
from .ddt import c_ddt
from .bct import c_bct_system, c_boomerang_uniformity
from .linearized import TrinomialSpec, delta_d, trinomial_roots
from .verdict import TheoremVerdict


def _ipoly(field: Field, coeffs, c: int) -> int:
    """Evaluate an integer-coefficient polynomial at a field element."""
    acc = 0
    for coef in reversed(coeffs):
        acc = field.add(field.mul(acc, c), field.from_int(coef))
    return acc


# -- Gold functions ------------------------------------------------------------


def gold_bound_check(field: Field, k: int, c: int) -> TheoremVerdict:
    """Lower bounds for x^(p^k + 1): the root-count product and the parity
    clauses (>= 2 for odd n/gcd(n,k); >= p^g when c^-1 = z^(p^k) + z has a
    nonzero solution and n/gcd(n,k) is even)."""
    if c in (0, field.one):
        raise ValueError("multiplier must avoid 0 and 1")
    g = math.gcd(field.n, k)
    m = field.n // g
    gold = family("gold", field, k=k)
    beta = c_boomerang_uniformity(gold, c)
    cinv = field.inv(c)
    d1 = delta_d(field, k, field.sub(field.one, cinv))
    d2 = delta_d(field, k, field.add(field.one, c))
    bound = d1 * (d2 + 1)
    checks = {"product": beta >= bound}
    if m % 2 == 1:
        checks["odd-m"] = beta >= 2
    else:
        # is c^-1 = z^(p^k) + z solvable with z != 0?
        _, roots = trinomial_roots(TrinomialSpec(field, k, field.neg(field.one), cinv))
        if any(r != 0 for r in roots):
            checks["even-m"] = beta >= field.p**g
    notes = []
    if m == 1:
        notes.append("degenerate m=1: the exponent acts as squaring")
    return TheoremVerdict(
        theorem="gold-lower-bounds",
        params={"p": field.p, "n": field.n, "k": k, "c": field.el_str(c),
                "beta": beta, "delta_parts": [d1, d2], "product_bound": bound,
                "m": m, "checks": {kk: bool(v) for kk, v in checks.items()}},
        passed=all(checks.values()),
        notes="; ".join(notes),
    )


# -- the Chebyshev pair count for x^((3^k + 1)/2) -------------------------------


def _mu_lhs(field: Field, k: int, c: int, variant: str):
    """Left-hand sides of the two Chebyshev equations over the (gamma, x) grid.

    'corrected' carries the coefficients obtained by adding/subtracting the
    two transformed equations; 'printed' reproduces the published display,
    whose middle coefficients came out swapped (kept for comparison).
    """
    d = (3**k + 1) // 2
    dp = (3**k - 1) // 2
    q = field.q
    Td = field.chebyshev_all(d)
    Tdp = field.chebyshev_all(dp)
    idx = np.arange(q)
    X = field.sub_t[field.add_t, 1]  # X[g, x] = x + g - 1
    Y = field.sub_t[idx, 1][None, :]
    M = field.mul_t
    two = field.from_int(2)
    ci = field.inv(c)
    cmci, cpci, cimc = field.sub(c, ci), field.add(c, ci), field.sub(ci, c)
    TdX, TdpX = Td[X], Tdp[X]
    TdY, TdpY = Td[Y], Tdp[Y]
    if variant == "corrected":
        c11, c12 = field.neg(cpci), cmci
        c21, c22 = cmci, field.neg(cpci)
    elif variant == "printed":
        c11, c12 = field.neg(cmci), cpci
        c21, c22 = cpci, cimc
    else:
        raise ValueError(f"unknown variant {variant!r}")
    L1 = field.add_t[M[two][TdX], field.add_t[M[c11][TdY], M[c12][TdpY]]]
    L2 = field.add_t[M[two][TdpX], field.add_t[M[c21][TdY], M[c22][TdpY]]]
    return L1, L2


def mu_c_profile(field: Field, k: int, c: int, variant: str = "corrected") -> np.ndarray:
    """Pair counts mu_c(b) for every b at once (p = 3 only)."""
    if field.p != 3:
        raise ValueError("the Chebyshev system lives in characteristic 3")
    if c == 0:
        raise ValueError("multiplier c must be nonzero")
    L1, L2 = _mu_lhs(field, k, c, variant)
    half = field.inv(field.from_int(2))
    bvals = field.mul_t[half][L1]
    return np.bincount(bvals[L2 == 0], minlength=field.q).astype(np.int64)


def mu_c_count(field: Field, k: int, c: int, b: int, variant: str = "corrected") -> int:
    """The pair count mu_c for one b."""
    return int(mu_c_profile(field, k, c, variant)[field.check(b)])


def mu_c_minus1_profile(field: Field, k: int) -> np.ndarray:
    """Counts for the specialized c = -1 system as displayed."""
    if field.p != 3:
        raise ValueError("characteristic 3 only")
    d = (3**k + 1) // 2
    dp = (3**k - 1) // 2
    q = field.q
    Td = field.chebyshev_all(d)
    Tdp = field.chebyshev_all(dp)
    idx = np.arange(q)
    X = field.sub_t[field.add_t, 1]
    Y = field.sub_t[idx, 1][None, :]
    L1 = field.add_t[Td[X], Tdp[Y]]          # = 2b
    L2 = field.sub_t[Tdp[X], Td[Y]]          # = 0
    half = field.inv(field.from_int(2))
    bvals = field.mul_t[half][L1]
    return np.bincount(bvals[L2 == 0], minlength=q).astype(np.int64)


def mu_c_check(field: Field, k: int, c: int) -> TheoremVerdict:
    """Row a = 1 of the boomerang table dominates mu_c for every b != 0.

    The corrected system turns out to reproduce the row exactly; equality is
    recorded.  The c = -1 specialized display is compared where applicable.
    """
    if c in (0, field.one):
        raise ValueError("multiplier must avoid 0 and 1")
    hg = family("half_gold", field, k=k)
    row = c_bct_system(hg, c).entries[1]
    mu = mu_c_profile(field, k, c)
    ok_bound = all(int(row[b]) >= int(mu[b]) for b in range(1, field.q))
    exact = all(int(row[b]) == int(mu[b]) for b in range(field.q))
    notes = ["system reproduces the row exactly" if exact else "bound only"]
    minus1 = field.neg(field.one)
    if c == minus1:
        spec_profile = mu_c_minus1_profile(field, k)
        agree = bool((spec_profile == mu).all())
        notes.append(f"c=-1 specialized display {'agrees' if agree else 'disagrees'}")
    bad = [[field.el_str(b), int(mu[b]), int(row[b])]
           for b in range(1, field.q) if row[b] < mu[b]]
    return TheoremVerdict(
        theorem="half-gold-chebyshev-bound",
        params={"p": field.p, "n": field.n, "k": k, "c": field.el_str(c)},
        passed=ok_bound,
        witnesses=bad[:5],
        notes="; ".join(notes),
    )


# -- inverse function, characteristic 2 -----------------------------------------


def _binary_core_exists(field: Field, c: int) -> tuple[bool, int | None]:
    """Some b with D = b^2 c + b c^2 + b + c^2 + 1 != 0 and
    Tr(b^2 c^2 (bc + c + 1) / D^2) = 0."""
    for b in field.elements():
        b2 = field.mul(b, b)
        c2 = field.mul(c, c)
        D = field.add(field.add(field.mul(b2, c), field.mul(b, c2)),
                      field.add(b, field.add(c2, field.one)))
        if D == 0:
            continue
        num = field.mul(field.mul(b2, c2),
                        field.add(field.mul(b, c), field.add(c, field.one)))
        val = field.mul(num, field.inv(field.mul(D, D)))
        if field.trace(val) == 0:
            return True, b
    return False, None


def binary_inverse_conditions(field: Field, c: int) -> dict:
    """The four published conditions for the inverse map over GF(2^n).

    Condition (iii)'s trace argument is printed as c^3/(c^2+c+1)^2 in the
    statement and c/(c^2+c+1)^2 in the underlying case analysis; both are
    evaluated.
    """
    one = field.one
    core, core_b = _binary_core_exists(field, c)
    c2 = field.mul(c, c)
    poly = field.add(field.add(c2, c), one)  # c^2 + c + 1
    out = {
        "i": field.trace(c) == 0 and core,
        "ii": field.trace(field.inv(c)) == 0 and core,
        "iii_statement": False,
        "iii_proof": False,
        "iv": False,
        "core_b": core_b,
    }
    if poly != 0:
        den = field.inv(field.mul(poly, poly))
        out["iii_statement"] = field.trace(field.mul(field.pow(c, 3), den)) == 0 and core
        out["iii_proof"] = field.trace(field.mul(c, den)) == 0 and core
    else:
        for b in field.elements():
            b2 = field.mul(b, b)
            dd = field.add(field.add(b2, b), one)
            if dd == 0:
                continue
            num = field.mul(field.mul(b2, c), field.add(b, c))
            if field.trace(field.mul(num, field.inv(field.mul(dd, dd)))) == 0:
                out["iv"] = True
                break
    return out


def inverse_binary_verify(field: Field, c: int,
                          cond3: str = "statement") -> TheoremVerdict:
    """Size caps for the binary inverse table plus the beta = 3 equivalence.

    Caps: every entry <= 1 (n = 2), <= 2 (n = 3), <= 3 (n >= 4).  For
    n >= 4 the maximal value 3 occurs exactly when one of the four published
    conditions holds; `cond3` picks which printed trace goes into (iii).
    """
    if field.p != 2:
        raise ValueError("binary verifier needs p = 2")
    if c in (0, field.one):
        raise ValueError("multiplier must avoid 0 and 1")
    F = family("inverse", field)
    table = c_bct_system(F, c).entries
    cap = 1 if field.n == 2 else (2 if field.n == 3 else 3)
    cap_ok = int(table.max()) <= cap
    beta = int(table[1:, 1:].max())
    conds = binary_inverse_conditions(field, c)
    c3 = conds["iii_statement"] if cond3 == "statement" else conds["iii_proof"]
    any_cond = conds["i"] or conds["ii"] or c3 or conds["iv"]
    iff_ok = field.n < 4 or ((beta == 3) == any_cond)
    witnesses = []
    if beta == cap:
        aa, bb = np.unravel_index(int(table[1:, 1:].argmax()), (field.q - 1, field.q - 1))
        witnesses.append(["cell", field.el_str(int(aa) + 1), field.el_str(int(bb) + 1)])
    return TheoremVerdict(
        theorem="inverse-binary",
        params={"p": 2, "n": field.n, "c": field.el_str(c), "beta": beta,
                "cap": cap, "conditions": {kk: conds[kk] for kk in
                                           ("i", "ii", "iii_statement", "iii_proof", "iv")},
                "cond3_reading": cond3},
        passed=cap_ok and iff_ok,
        witnesses=witnesses,
        notes="" if cap_ok else "size cap violated",
    )


def inverse_binary_survey(field: Field) -> dict:
    """Which reading of condition (iii) makes the equivalence exhaustive."""
    rows = []
    for c in range(2, field.q):
        beta = c_boomerang_uniformity(family("inverse", field), c)
        conds = binary_inverse_conditions(field, c)
        rows.append((c, beta, conds))
    result = {}
    for reading in ("statement", "proof"):
        key = "iii_statement" if reading == "statement" else "iii_proof"
        result[reading] = all(
            (beta == 3) == (conds["i"] or conds["ii"] or conds[key] or conds["iv"])
            for _, beta, conds in rows
        )
    result["per_c"] = [
        {"c": field.el_str(c), "beta": beta,
         **{kk: conds[kk] for kk in ("i", "ii", "iii_statement", "iii_proof", "iv")}}
        for c, beta, conds in rows
    ]
    return result


# -- inverse function, odd characteristic ----------------------------------------


def inverse_odd_verify(field: Field, c: int) -> TheoremVerdict:
    """Entries of the odd-characteristic inverse table are capped by 4; the
    two published quartic conditions force beta = 4 at an explicit b."""
    if field.p == 2:
        raise ValueError("odd-characteristic verifier needs p odd")
    if c in (0, field.one):
        raise ValueError("multiplier must avoid 0 and 1")
    F = family("inverse", field)
    table = c_bct_system(F, c).entries
    cap_ok = int(table.max()) <= 4
    beta = int(table[1:, 1:].max())
    c2 = field.mul(c, c)
    cond_extra = []
    passed = cap_ok
    notes = []
    sq = field.is_square
    if _ipoly(field, (1, 2, -2, 2, 1), c) == 0 and \
            sq(_ipoly(field, (3, -2, 3), c)) and sq(_ipoly(field, (1, -4), c)) and \
            sq(_ipoly(field, (0, -4, 1), c)):
        bw = field.mul(field.sub(c2, field.one), field.inv(field.add(c2, field.one)))
        hit = int(table[1, bw])
        cond_extra.append(["i", field.el_str(bw), hit])
        passed = passed and beta == 4 and hit == 4
        notes.append("quartic condition (i) fired")
    if _ipoly(field, (1, -2, -2, -2, 1), c) == 0 and \
            sq(_ipoly(field, (1, -6, 1), c)) and sq(_ipoly(field, (1, -4), c)) and \
            sq(_ipoly(field, (0, -4, 1), c)):
        bw = field.mul(field.sub(c2, field.one),
                       field.inv(field.mul(field.from_int(2), c)))
        hit = int(table[1, bw])
        cond_extra.append(["ii", field.el_str(bw), hit])
        passed = passed and beta == 4 and hit == 4
        notes.append("quartic condition (ii) fired")
    return TheoremVerdict(
        theorem="inverse-odd",
        params={"p": field.p, "n": field.n, "c": field.el_str(c), "beta": beta},
        passed=passed,
        witnesses=cond_extra,
        notes="; ".join(notes) if notes else "cap only; quartic conditions silent",
    )


# -- quadratic census -------------------------------------------------------------


def lemma_quadratic_census(field: Field) -> TheoremVerdict:
    """solve_quadratic's predicted root count vs an exhaustive scan, for
    every monic quadratic x^2 + a1 x + a0 over the field."""
    q = field.q
    idx = np.arange(q)
    sq_all = field.mul_t[idx, idx]
    mism = []
    for a1 in range(q):
        vals = field.add_t[sq_all, field.mul_t[a1][idx]]  # x^2 + a1 x
        scan = np.bincount(field.neg_t[vals], minlength=q)  # roots per a0
        for a0 in range(q):
            predicted = len(field.solve_quadratic(a1, a0))
            if predicted != int(scan[a0]):
                mism.append([field.el_str(a1), field.el_str(a0),
                             predicted, int(scan[a0])])
    return TheoremVerdict(
        theorem="quadratic-root-census",
        params={"p": field.p, "n": field.n, "quadratics": q * q},
        passed=not mism,
        witnesses=mism[:5],
    )
