"""Builtin identities and bivariate relations.

Twelve univariate sum = product identities (two mod-5, two mod-12, the
four-member mod-36 family built on the quintuple product, and a four-member
mod-18 family), six two-variable relations refining them, and the linear
combination that derives the fourth mod-36 identity from two known ones.
"""

from __future__ import annotations

import time

from .identities import (
    IdentitySpec,
    LinExpr,
    PochFactorSpec,
    PochInfAtom,
    ProductSideSpec,
    QuadExpr,
    QuintupleAtom,
    ResidueAtom,
    SumSideSpec,
    VerificationReport,
    compare_biseries,
    compare_series,
    eval_product_side,
    eval_sum_side,
    lin,
    quad,
)
from .products import (
    apply_factor,
    bi_apply_a_factor,
    bi_apply_a_trinomial,
)
from .series import BiSeries, Series


def _num(sign: int, base: int, step: int, length: LinExpr) -> PochFactorSpec:
    return PochFactorSpec(sign, lin(0, base), step, length, False)


def _den(sign: int, base: int, step: int, length: LinExpr) -> PochFactorSpec:
    return PochFactorSpec(sign, lin(0, base), step, length, True)


def _resprod(modulus: int, *residues: int) -> ProductSideSpec:
    return ProductSideSpec((ResidueAtom(modulus, frozenset(residues)),))


def _mod36_rhs(x_exp: int) -> ProductSideSpec:
    return ProductSideSpec(
        (
            QuintupleAtom(18, x_exp),
            PochInfAtom(1, 2, 2, denominator=True),
        )
    )


def _mod18_rhs(nines: tuple[int, ...], eighteens: tuple[int, int]) -> ProductSideSpec:
    atoms = [PochInfAtom(1, b, 9) for b in nines]
    atoms += [PochInfAtom(1, b, 18) for b in eighteens]
    atoms.append(PochInfAtom(1, 1, 1, denominator=True))
    return ProductSideSpec(tuple(atoms))


J = lin(1, 0)
J1 = lin(1, 1)
TWOJ = lin(2, 0)
TWOJ1 = lin(2, 1)

_BUILTINS: tuple[IdentitySpec, ...] = (
    IdentitySpec(
        "rr1",
        SumSideSpec(0, quad(1, 0, 0), (_den(1, 1, 1, J),)),
        _resprod(5, 1, 4),
        label="Rogers-Ramanujan: gap >= 2 vs parts +-1 (mod 5)",
    ),
    IdentitySpec(
        "rr2",
        SumSideSpec(0, quad(1, 1, 0), (_den(1, 1, 1, J),)),
        _resprod(5, 2, 3),
        label="Rogers-Ramanujan: gap >= 2, no ones, vs parts +-2 (mod 5)",
    ),
    IdentitySpec(
        "ram12",
        SumSideSpec(
            0,
            quad(1, 0, 0),
            (
                _num(1, 3, 6, J),
                _den(1, 1, 2, J),
                _den(1, 1, 2, J),
                _den(1, 4, 4, J),
            ),
        ),
        _resprod(12, 1, 2, 3, 5, 7, 9, 10, 11),
        label="Ramanujan: odd parts or +-2 (mod 12)",
    ),
    IdentitySpec(
        "slater110",
        SumSideSpec(
            0,
            quad(1, 2, 0),
            (
                _num(1, 3, 6, J),
                _den(1, 1, 2, J),
                _den(1, 1, 2, J1),
                _den(1, 4, 4, J),
            ),
        ),
        _resprod(12, 1, 3, 4, 5, 7, 8, 9, 11),
        label="Slater no. 110: odd parts or +-4 (mod 12)",
    ),
    IdentitySpec(
        "slater125",
        SumSideSpec(
            0,
            quad(2, 4, 0),
            (_num(1, 3, 6, J), _den(1, 2, 2, TWOJ1), _den(1, 1, 2, J)),
        ),
        _mod36_rhs(7),
        label="Slater no. 125: mod-36 family at x = q^7",
    ),
    IdentitySpec(
        "slater124",
        SumSideSpec(
            0,
            quad(2, 2, 0),
            (_num(1, 3, 6, J), _den(1, 2, 2, TWOJ1), _den(1, 1, 2, J)),
        ),
        _mod36_rhs(5),
        label="Slater no. 124: mod-36 family at x = q^5",
    ),
    IdentitySpec(
        "ram36",
        SumSideSpec(
            0,
            quad(2, 0, 0),
            (_num(1, 3, 6, J), _den(1, 2, 2, TWOJ), _den(1, 1, 2, J)),
        ),
        _mod36_rhs(3),
        label="Ramanujan: mod-36 family at x = q^3",
    ),
    IdentitySpec(
        "new36",
        SumSideSpec(
            0,
            quad(2, 2, 0),
            (_num(1, 3, 6, J), _den(1, 2, 2, TWOJ), _den(1, 1, 2, J1)),
        ),
        _mod36_rhs(1),
        label="the missing mod-36 family member at x = q",
    ),
    IdentitySpec(
        "m18-1",
        SumSideSpec(
            0,
            quad(1, 1, 0),
            (_num(-1, 0, 3, J), _den(-1, 0, 1, J), _den(1, 1, 1, TWOJ)),
        ),
        _mod18_rhs((1, 8, 9), (7, 11)),
        label="mod-18 family, first: parts +-2..+-6 (mod 18)",
    ),
    IdentitySpec(
        "m18-2",
        SumSideSpec(
            0,
            quad(1, 0, 0),
            (_num(-1, 0, 3, J), _den(-1, 0, 1, J), _den(1, 1, 1, TWOJ)),
        ),
        _mod18_rhs((2, 7, 9), (5, 13)),
        label="mod-18 family, second: parts +-1,+-3,+-4,+-6,+-8 (mod 18)",
    ),
    IdentitySpec(
        "m18-3",
        SumSideSpec(
            0,
            quad(1, 1, 0),
            (_num(-1, 3, 3, J), _den(-1, 1, 1, J), _den(1, 1, 1, TWOJ1)),
        ),
        _mod18_rhs((3, 6, 9), (3, 15)),
        label="mod-18 family, third: block-excluded mod-9 parts",
    ),
    IdentitySpec(
        "m18-4",
        SumSideSpec(
            0,
            quad(1, 2, 0),
            (
                _num(-1, 3, 3, J),
                _den(1, 2, 2, J),
                PochFactorSpec(1, lin(1, 2), 1, J1, True),
            ),
        ),
        _mod18_rhs((4, 5, 9), (1, 17)),
        label="mod-18 family, fourth: parts +-2,+-3,+-6,+-7,+-8 (mod 18)",
    ),
)

_BY_NAME = {spec.name: spec for spec in _BUILTINS}


def builtin_registry() -> list[IdentitySpec]:
    """The twelve builtin univariate identities, in family order."""
    return list(_BUILTINS)


def builtin(name: str) -> IdentitySpec:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown builtin identity {name!r}") from None


# ---------------------------------------------------------------------------
# Bivariate relations
# ---------------------------------------------------------------------------

BIVARIATE_NAMES = ("arr2", "arr1", "f1-qde", "f2-qde", "aram12", "aslater110")

BIVARIATE_LABELS = {
    "arr2": "two-variable refinement of rr2 (alternating-sum form)",
    "arr1": "two-variable refinement of rr1 (alternating-sum form)",
    "f1-qde": "first q-difference equation linking the refinements",
    "f2-qde": "second q-difference equation linking the refinements",
    "aram12": "two-variable refinement of ram12 with product right side",
    "aslater110": "two-variable refinement of slater110 with product right side",
}

# a=1 specialization targets for acceptance checks
A1_SPECIALIZATIONS = {
    "arr2": "rr2",
    "arr1": "rr1",
    "aram12": "ram12",
    "aslater110": "slater110",
}

_F1_SPEC = SumSideSpec(0, quad(1, 1, 0), (_den(1, 1, 1, J),), a_power=J)
_F2_SPEC = SumSideSpec(0, quad(1, 0, 0), (_den(1, 1, 1, J),), a_power=J)


def gen_no_ones(order: int) -> BiSeries:
    """Sum of a^j q^(j^2+j) / (q;q)_j: a tracks the number of parts of a
    gap >= 2 partition without ones."""
    out = eval_sum_side(_F1_SPEC, order)
    assert isinstance(out, BiSeries)
    return out


def gen_all(order: int) -> BiSeries:
    """Sum of a^j q^(j^2) / (q;q)_j: a tracks the number of parts of a
    gap >= 2 partition."""
    out = eval_sum_side(_F2_SPEC, order)
    assert isinstance(out, BiSeries)
    return out


def _new_table(order: int) -> list[list]:
    rows: list[list] = [[0] * (order + 1) for _ in range(order + 1)]
    return rows


def _freeze(rows: list[list], order: int) -> BiSeries:
    return BiSeries(order, tuple(Series.from_coeffs(r, order) for r in rows))


def _alternating_rhs(order: int, lead_at, extra: str) -> BiSeries:
    """Shared shape of the right sides of arr1/arr2: a sum of terms
    (-1)^j a^(2j) q^lead(j) (a-Pochhammer factors) / (q;q)_j, divided by
    the infinite product of (1 - a q^k), k >= 1."""
    n = order
    total = _new_table(n)
    j = 0
    while lead_at(j) <= n:
        lead = lead_at(j)
        u: list = [0] * (n + 1)
        u[lead] = 1 if j % 2 == 0 else -1
        for k in range(1, j + 1):
            apply_factor(u, 1, k, divide=True)  # /(q;q)_j
        if 2 * j <= n:
            t = _new_table(n)
            t[2 * j] = u
            if extra == "arr2":
                for k in range(1, j + 1):  # *(aq;q)_j
                    bi_apply_a_factor(t, 1, k)
                bi_apply_a_factor(t, 1, 2 * j + 1)  # *(1 - a q^(2j+1))
            else:
                if j >= 1:
                    for k in range(1, j):  # *(aq;q)_(j-1)
                        bi_apply_a_factor(t, 1, k)
                    bi_apply_a_factor(t, 1, 2 * j)  # *(1 - a q^(2j))
            for l in range(n + 1):
                row = total[l]
                trow = t[l]
                for i in range(n + 1):
                    if trow[i]:
                        row[i] += trow[i]
        j += 1
    for k in range(1, n + 1):  # /(aq;q)_inf
        bi_apply_a_factor(total, 1, k, divide=True)
    return _freeze(total, n)


def _trinomial_over_linear_rhs(order: int, e1_at, e2_at) -> BiSeries:
    """Product over i >= 1 of (1 + a q^e1(i) + a^2 q^e2(i)) divided by
    (1 - a q^(2i-1)): the right-side shape of aram12/aslater110."""
    n = order
    rows = _new_table(n)
    rows[0][0] = 1
    i = 1
    while e1_at(i) <= n:
        bi_apply_a_trinomial(rows, e1_at(i), e2_at(i))
        i += 1
    k = 1
    while 2 * k - 1 <= n:
        bi_apply_a_factor(rows, 1, 2 * k - 1, divide=True)
        k += 1
    return _freeze(rows, n)


def _refined_sum_lhs(order: int, lead_at, a_poch_len) -> BiSeries:
    """Shared left side of aram12/aslater110: per-term numerator
    (q^3;q^6)_j over (q;q^2)_j (q^4;q^4)_j and a bivariate Pochhammer
    (aq;q^2) of length a_poch_len(j) in the denominator."""
    n = order
    total = _new_table(n)
    j = 0
    while lead_at(j) <= n:
        u: list = [0] * (n + 1)
        u[lead_at(j)] = 1
        for k in range(j):
            e = 3 + 6 * k
            if e <= n:
                apply_factor(u, 1, e)  # *(q^3;q^6)_j
        for k in range(j):
            e = 1 + 2 * k
            if e <= n:
                apply_factor(u, 1, e, divide=True)  # /(q;q^2)_j
        for k in range(j):
            e = 4 + 4 * k
            if e <= n:
                apply_factor(u, 1, e, divide=True)  # /(q^4;q^4)_j
        if j <= n:
            t = _new_table(n)
            t[j] = u
            for k in range(a_poch_len(j)):  # /(aq;q^2)_len
                e = 1 + 2 * k
                if e <= n:
                    bi_apply_a_factor(t, 1, e, divide=True)
            for l in range(n + 1):
                row = total[l]
                trow = t[l]
                for i in range(n + 1):
                    if trow[i]:
                        row[i] += trow[i]
        j += 1
    return _freeze(total, n)


def bivariate_sides(name: str, order: int) -> tuple[BiSeries, BiSeries]:
    """Left and right side of one of the six builtin bivariate relations."""
    if name == "arr2":
        lhs = gen_no_ones(order)
        rhs = _alternating_rhs(
            order, lambda j: j * (5 * j + 3) // 2, "arr2"
        )
    elif name == "arr1":
        lhs = gen_all(order)
        rhs = _alternating_rhs(
            order, lambda j: j * (5 * j - 1) // 2, "arr1"
        )
    elif name == "f1-qde":
        lhs = gen_no_ones(order)
        rhs = gen_all(order).subst_aq(1)
    elif name == "f2-qde":
        lhs = gen_all(order)
        f1 = gen_no_ones(order)
        rhs = f1 + BiSeries.monomial(1, 1, order) * f1.subst_aq(1)
    elif name == "aram12":
        lhs = _refined_sum_lhs(order, lambda j: j * j, lambda j: j)
        rhs = _trinomial_over_linear_rhs(
            order, lambda i: 4 * i - 2, lambda i: 8 * i - 4
        )
    elif name == "aslater110":
        lhs = _refined_sum_lhs(order, lambda j: j * j + 2 * j, lambda j: j + 1)
        rhs = _trinomial_over_linear_rhs(
            order, lambda i: 4 * i, lambda i: 8 * i
        )
    else:
        raise ValueError(f"unknown bivariate relation {name!r}")
    return lhs, rhs


def verify_bivariate_relation(name: str, order: int) -> VerificationReport:
    """Build both sides of a bivariate relation at the given q-order and
    compare every (a-degree, q-degree) coefficient."""
    start = time.perf_counter()
    lhs, rhs = bivariate_sides(name, order)
    return compare_biseries(name, order, lhs, rhs, start)


def verify_a1_specialization(name: str, order: int) -> VerificationReport:
    """Check that a bivariate relation evaluated at a = 1 reproduces both
    sides of its univariate counterpart."""
    start = time.perf_counter()
    target = A1_SPECIALIZATIONS[name]
    lhs, rhs = bivariate_sides(name, order)
    spec = builtin(target)
    uni_lhs = eval_sum_side(spec.lhs, order)
    uni_rhs = eval_product_side(spec.rhs, order)
    rep = compare_series(
        f"{name}-at-1-lhs", order, lhs.eval_a1(), uni_lhs, start
    )
    if not rep.passed:
        return rep
    return compare_series(
        f"{name}-at-1", order, rhs.eval_a1(), uni_rhs, start
    )


# ---------------------------------------------------------------------------
# The mod-36 combination
# ---------------------------------------------------------------------------

COMBINATION_NAME = "mod36-combination"


def verify_combination(order: int, route: str = "both") -> VerificationReport:
    """Check slater124 + q * slater125 = new36 on the sum sides, the
    product sides, or both."""
    if route not in ("sum", "product", "both"):
        raise ValueError("route must be sum, product, or both")
    start = time.perf_counter()
    routes = ("sum", "product") if route == "both" else (route,)
    report = None
    for r in routes:
        if r == "sum":
            s124 = eval_sum_side(builtin("slater124").lhs, order)
            s125 = eval_sum_side(builtin("slater125").lhs, order)
            new = eval_sum_side(builtin("new36").lhs, order)
        else:
            s124 = eval_product_side(builtin("slater124").rhs, order)
            s125 = eval_product_side(builtin("slater125").rhs, order)
            new = eval_product_side(builtin("new36").rhs, order)
        combined = s124 + s125.shift(1)
        report = compare_series(
            f"{COMBINATION_NAME}-{r}", order, combined, new, start
        )
        if not report.passed:
            return report
    if route == "both":
        return VerificationReport(
            COMBINATION_NAME, order, True, None, report.millis
        )
    return report
