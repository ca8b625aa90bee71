"""q-Pochhammer symbols, residue-class products, and the quintuple product.

Everything here evaluates to a truncated :class:`~qrsl.series.Series` or
:class:`~qrsl.series.BiSeries`.  Infinite products are truncated factor by
factor: a factor (1 - s*q^e) with e > N equals 1 modulo q^(N+1) and is
dropped, which is exact at order N.

The building blocks ``apply_factor`` / ``bi_apply_a_factor`` multiply or
divide a mutable coefficient table by a single binomial factor in O(N)
(resp. O(N^2)) time; the higher-level constructors and the identity engine
compose them so that no generic O(N^2) reciprocal is needed for product
sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .series import BiSeries, CoeffLike, Series

_HALF = Fraction(1, 2)


@dataclass(frozen=True, slots=True)
class QMonomial:
    """A signed power of q: sign * q^exponent, the admissible first
    argument of a Pochhammer symbol.  sign=-1 with exponent 0 is the
    constant -1."""

    sign: int
    exponent: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.exponent < 0:
            raise ValueError("exponent must be non-negative")


def qmono(exponent: int) -> QMonomial:
    return QMonomial(1, exponent)


def neg_qmono(exponent: int) -> QMonomial:
    return QMonomial(-1, exponent)


# ---------------------------------------------------------------------------
# In-place single-factor arithmetic on coefficient lists
# ---------------------------------------------------------------------------


def apply_factor(
    coeffs: list, sign: int, exponent: int, *, divide: bool = False
) -> None:
    """Multiply (divide=False) or divide (divide=True) the coefficient
    list in place by the factor (1 - sign*q^exponent).

    exponent 0 makes the factor the constant 1-sign: 2 for sign -1, and 0
    for sign +1, in which case dividing raises and multiplying zeroes the
    series.
    """
    n = len(coeffs) - 1
    if exponent == 0:
        if sign == 1:
            if divide:
                raise ZeroDivisionError("factor (1 - q^0) is zero")
            for i in range(n + 1):
                coeffs[i] = 0
            return
        # constant factor 2
        if divide:
            for i in range(n + 1):
                if coeffs[i]:
                    coeffs[i] = coeffs[i] * _HALF
        else:
            for i in range(n + 1):
                if coeffs[i]:
                    coeffs[i] = coeffs[i] * 2
        return
    if exponent > n:
        return
    if divide:
        # r = s / (1 - sign q^e)  <=>  r[i] = s[i] + sign * r[i-e]
        if sign == 1:
            for i in range(exponent, n + 1):
                prev = coeffs[i - exponent]
                if prev:
                    coeffs[i] = coeffs[i] + prev
        else:
            for i in range(exponent, n + 1):
                prev = coeffs[i - exponent]
                if prev:
                    coeffs[i] = coeffs[i] - prev
    else:
        # r = s * (1 - sign q^e)  <=>  r[i] = s[i] - sign * s[i-e]
        if sign == 1:
            for i in range(n, exponent - 1, -1):
                prev = coeffs[i - exponent]
                if prev:
                    coeffs[i] = coeffs[i] - prev
        else:
            for i in range(n, exponent - 1, -1):
                prev = coeffs[i - exponent]
                if prev:
                    coeffs[i] = coeffs[i] + prev


def bi_apply_a_factor(
    rows: list[list], sign: int, exponent: int, *, divide: bool = False
) -> None:
    """Multiply or divide a bivariate coefficient table in place by the
    factor (1 - sign*a*q^exponent).  rows[l][i] is the a^l q^i entry."""
    depth = len(rows) - 1
    n = len(rows[0]) - 1
    if divide:
        # r[l][i] = s[l][i] + sign * r[l-1][i-e]; rows ascending
        for l in range(1, depth + 1):
            lower = rows[l - 1]
            cur = rows[l]
            for i in range(exponent, n + 1):
                prev = lower[i - exponent]
                if prev:
                    cur[i] = cur[i] + prev if sign == 1 else cur[i] - prev
    else:
        # r[l][i] = s[l][i] - sign * s[l-1][i-e]; rows descending
        for l in range(depth, 0, -1):
            lower = rows[l - 1]
            cur = rows[l]
            for i in range(n, exponent - 1, -1):
                prev = lower[i - exponent]
                if prev:
                    cur[i] = cur[i] - prev if sign == 1 else cur[i] + prev


def bi_apply_a_trinomial(rows: list[list], e1: int, e2: int) -> None:
    """Multiply a bivariate coefficient table in place by the factor
    (1 + a*q^e1 + a^2*q^e2)."""
    depth = len(rows) - 1
    n = len(rows[0]) - 1
    for l in range(depth, 0, -1):
        cur = rows[l]
        lower = rows[l - 1]
        for i in range(n, e1 - 1, -1):
            prev = lower[i - e1]
            if prev:
                cur[i] = cur[i] + prev
        if l >= 2:
            lower2 = rows[l - 2]
            for i in range(n, e2 - 1, -1):
                prev = lower2[i - e2]
                if prev:
                    cur[i] = cur[i] + prev


def _freeze_rows(rows: list[list], order: int) -> BiSeries:
    return BiSeries(
        order, tuple(Series.from_coeffs(r, order) for r in rows)
    )


def _new_table(order: int) -> list[list]:
    rows: list[list] = [[0] * (order + 1) for _ in range(order + 1)]
    rows[0][0] = 1
    return rows


# ---------------------------------------------------------------------------
# Pochhammer products
# ---------------------------------------------------------------------------


def poch_finite(mono: QMonomial, step: int, length: int, order: int) -> Series:
    """The finite product of (1 - sign*q^(exponent + step*k)) over
    k = 0..length-1; length 0 is the empty product 1."""
    if step < 1:
        raise ValueError("step must be positive")
    if length < 0:
        raise ValueError("length must be non-negative")
    coeffs: list = [0] * (order + 1)
    coeffs[0] = 1
    for k in range(length):
        e = mono.exponent + step * k
        if e > order and e > 0:
            break
        apply_factor(coeffs, mono.sign, e)
    return Series.from_coeffs(coeffs, order)


def poch_inf(mono: QMonomial, step: int, order: int) -> Series:
    """The infinite product of (1 - sign*q^(exponent + step*k)), k >= 0.
    Requires exponent >= 1, or exponent 0 with sign -1; the sign +1
    exponent 0 product vanishes identically and is rejected."""
    if step < 1:
        raise ValueError("step must be positive")
    if mono.exponent == 0 and mono.sign == 1:
        raise ValueError("infinite product with factor (1 - q^0) vanishes")
    coeffs: list = [0] * (order + 1)
    coeffs[0] = 1
    e = mono.exponent
    while e <= order or e == 0:
        apply_factor(coeffs, mono.sign, e)
        e += step
    return Series.from_coeffs(coeffs, order)


def poch_inf_recip(mono: QMonomial, step: int, order: int) -> Series:
    """Reciprocal of :func:`poch_inf`, computed factor by factor."""
    if step < 1:
        raise ValueError("step must be positive")
    if mono.exponent == 0 and mono.sign == 1:
        raise ValueError("infinite product with factor (1 - q^0) vanishes")
    coeffs: list = [0] * (order + 1)
    coeffs[0] = 1
    e = mono.exponent
    while e <= order or e == 0:
        apply_factor(coeffs, mono.sign, e, divide=True)
        e += step
    return Series.from_coeffs(coeffs, order)


def residue_product(
    modulus: int, residues: Iterable[int], order: int
) -> Series:
    """Product of 1/(1-q^k) over k >= 1 whose residue mod ``modulus`` lies
    in ``residues`` (given in 1..modulus, with ``modulus`` denoting the
    class of multiples)."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    rset = set(residues)
    if not rset:
        raise ValueError("residue set must be non-empty")
    for r in rset:
        if not 1 <= r <= modulus:
            raise ValueError(f"residue {r} outside 1..{modulus}")
    allowed = {r % modulus for r in rset}
    coeffs: list = [0] * (order + 1)
    coeffs[0] = 1
    for k in range(1, order + 1):
        if k % modulus in allowed:
            apply_factor(coeffs, 1, k, divide=True)
    return Series.from_coeffs(coeffs, order)


# ---------------------------------------------------------------------------
# The quintuple product
# ---------------------------------------------------------------------------


def _quintuple_families(w: int, x: int) -> list[tuple[int, int, int]]:
    # (sign, base exponent, step) of the five infinite factor families
    return [
        (-1, w - x, w),
        (-1, x, w),
        (1, w, w),
        (1, w - 2 * x, 2 * w),
        (1, w + 2 * x, 2 * w),
    ]


def quintuple_product(w_exp: int, x_exp: int, order: int) -> Series:
    """The five-factor theta-style product with w = q^w_exp, x = q^x_exp:
    the product of (-w/x, -x, w; w)_inf and (w/x^2, w*x^2; w^2)_inf.
    Requires w_exp > 2*x_exp so every factor exponent is positive."""
    if x_exp < 1:
        raise ValueError("x exponent must be positive")
    if w_exp - 2 * x_exp <= 0:
        raise ValueError("need w_exp > 2*x_exp for positive exponents")
    coeffs: list = [0] * (order + 1)
    coeffs[0] = 1
    for sign, base, step in _quintuple_families(w_exp, x_exp):
        e = base
        while e <= order:
            apply_factor(coeffs, sign, e)
            e += step
    return Series.from_coeffs(coeffs, order)


def quintuple_product_split(w_exp: int, x_exp: int, order: int) -> Series:
    """The same value expressed as a sum of two triple products,
    (w*x^3, w^2/x^3, w^3; w^3)_inf + x*(w/x^3, w^2*x^3, w^3; w^3)_inf.
    Requires w_exp > 3*x_exp; larger x has no direct expansion of this
    shape and must be reached through linear combinations of instances."""
    if x_exp < 1:
        raise ValueError("x exponent must be positive")
    if w_exp - 3 * x_exp <= 0:
        raise ValueError("need w_exp > 3*x_exp for positive exponents")
    w3 = 3 * w_exp

    def triple(bases: tuple[int, int, int]) -> list:
        coeffs: list = [0] * (order + 1)
        coeffs[0] = 1
        for base in bases:
            e = base
            while e <= order:
                apply_factor(coeffs, 1, e)
                e += w3
        return coeffs

    first = triple((w_exp + 3 * x_exp, 2 * w_exp - 3 * x_exp, w3))
    second = triple((w_exp - 3 * x_exp, 2 * w_exp + 3 * x_exp, w3))
    out = first
    for i in range(order, x_exp - 1, -1):
        out[i] = out[i] + second[i - x_exp]
    return Series.from_coeffs(out, order)


# ---------------------------------------------------------------------------
# Bivariate Pochhammer products
# ---------------------------------------------------------------------------


def bi_poch_finite(
    base_exp: int, step: int, length: int, order: int, sign: int = 1
) -> BiSeries:
    """Finite product of (1 - sign*a*q^(base_exp + step*k)) for
    k = 0..length-1 as a BiSeries."""
    if step < 1:
        raise ValueError("step must be positive")
    if length < 0:
        raise ValueError("length must be non-negative")
    if base_exp < 0:
        raise ValueError("base exponent must be non-negative")
    rows = _new_table(order)
    for k in range(length):
        e = base_exp + step * k
        if e > order:
            break
        bi_apply_a_factor(rows, sign, e)
    return _freeze_rows(rows, order)


def bi_poch_inf_recip(base_exp: int, step: int, order: int) -> BiSeries:
    """Reciprocal of the infinite product of (1 - a*q^(base_exp + step*k));
    requires base_exp >= 1 so every a carries at least one power of q."""
    if step < 1:
        raise ValueError("step must be positive")
    if base_exp < 1:
        raise ValueError("base exponent must be at least 1")
    rows = _new_table(order)
    e = base_exp
    while e <= order:
        bi_apply_a_factor(rows, 1, e, divide=True)
        e += step
    return _freeze_rows(rows, order)
