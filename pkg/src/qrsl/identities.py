"""Declarative identity specifications and their verification.

An :class:`IdentitySpec` pairs a q-hypergeometric sum side (a leading
exponent polynomial in the summation index j times a list of Pochhammer
factors) with a product side (an ordered list of infinite-product atoms).
``verify_identity`` expands both sides to a requested truncation order and
compares coefficients exactly.

Sum sides terminate because the leading exponent is a polynomial with
positive leading coefficient while every factor is a unit series: once the
exponent has passed its vertex and exceeds the order, no later term can
contribute below the truncation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .products import apply_factor, quintuple_product
from .series import BiSeries, Series


@dataclass(frozen=True, slots=True)
class LinExpr:
    """Integer-linear expression c1*j + c0."""

    c1: int
    c0: int

    def at(self, j: int) -> int:
        return self.c1 * j + self.c0


@dataclass(frozen=True, slots=True)
class QuadExpr:
    """Integer-quadratic expression c2*j^2 + c1*j + c0."""

    c2: int
    c1: int
    c0: int

    def at(self, j: int) -> int:
        return (self.c2 * j + self.c1) * j + self.c0

    def grows(self) -> bool:
        """True when the expression increases without bound for large j,
        the condition that makes a sum side terminate."""
        return self.c2 > 0 or (self.c2 == 0 and self.c1 > 0)

    def min_from(self, j0: int) -> int:
        """Minimum over integer j >= j0 (requires ``grows()``)."""
        if self.c2 == 0:
            return self.at(j0)
        vertex = -self.c1 / (2 * self.c2)
        best = self.at(j0)
        for j in (int(vertex), int(vertex) + 1):
            if j >= j0:
                best = min(best, self.at(j))
        return best


def lin(c1: int, c0: int) -> LinExpr:
    return LinExpr(c1, c0)


def quad(c2: int, c1: int, c0: int) -> QuadExpr:
    return QuadExpr(c2, c1, c0)


@dataclass(frozen=True, slots=True)
class PochFactorSpec:
    """One Pochhammer factor of a sum-side term: the product over
    k = 0..length(j)-1 of (1 - sign*q^(base(j) + step*k)), either in the
    numerator or (denominator=True) inverted."""

    sign: int
    base: LinExpr
    step: int
    length: LinExpr
    denominator: bool


@dataclass(frozen=True, slots=True)
class SumSideSpec:
    """Sum over j >= start of const * q^lead(j) * numerator factors /
    denominator factors, optionally carrying a^(a_power(j)) per term."""

    start: int
    lead: QuadExpr
    factors: tuple[PochFactorSpec, ...]
    const: Fraction = Fraction(1)
    a_power: Optional[LinExpr] = None


@dataclass(frozen=True, slots=True)
class PochInfAtom:
    """Infinite product of (1 - sign*q^(base + step*k)), k >= 0."""

    sign: int
    base: int
    step: int
    denominator: bool = False


@dataclass(frozen=True, slots=True)
class QuintupleAtom:
    """The five-factor product at w = q^w_exp, x = q^x_exp."""

    w_exp: int
    x_exp: int
    denominator: bool = False


@dataclass(frozen=True, slots=True)
class ResidueAtom:
    """Product of 1/(1-q^k) over k in the residue classes; denominator
    position inverts it."""

    modulus: int
    residues: frozenset[int]
    denominator: bool = False


@dataclass(frozen=True, slots=True)
class MonomialAtom:
    """An explicit factor q^exponent."""

    exponent: int


@dataclass(frozen=True, slots=True)
class ConstAtom:
    """An integer constant factor."""

    value: int
    denominator: bool = False


ProductAtom = Union[PochInfAtom, QuintupleAtom, ResidueAtom, MonomialAtom, ConstAtom]


@dataclass(frozen=True, slots=True)
class ProductSideSpec:
    """Ordered product of atoms, with an optional comparison shift d:
    verification compares sum-side coefficient n against product-side
    coefficient n - d."""

    atoms: tuple[ProductAtom, ...]
    shift: int = 0


@dataclass(frozen=True, slots=True)
class IdentitySpec:
    name: str
    lhs: SumSideSpec
    rhs: ProductSideSpec
    label: str = field(default="", compare=False)


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """Outcome of one coefficientwise comparison.  ``mismatch`` is None on
    success, else (n, lhs, rhs) at the first disagreement; for bivariate
    comparisons ``mismatch_a_deg`` carries the a-degree as well."""

    name: str
    order: int
    passed: bool
    mismatch: Optional[tuple[int, Fraction, Fraction]]
    millis: int
    mismatch_a_deg: Optional[int] = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_record(self) -> dict:
        if self.mismatch is None:
            mm = None
        else:
            n, lv, rv = self.mismatch
            mm = {"n": n, "lhs": str(lv), "rhs": str(rv)}
            if self.mismatch_a_deg is not None:
                mm["l"] = self.mismatch_a_deg
        return {
            "name": self.name,
            "order": self.order,
            "status": self.status,
            "mismatch": mm,
            "millis": self.millis,
        }


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def _term_coeffs(spec: SumSideSpec, j: int, order: int) -> list:
    lead = spec.lead.at(j)
    coeffs: list = [0] * (order + 1)
    coeffs[lead] = spec.const
    for f in spec.factors:
        length = f.length.at(j)
        if length < 0:
            raise ValueError(
                f"factor length {length} negative at j={j}"
            )
        base = f.base.at(j)
        if base < 0:
            raise ValueError(f"factor base exponent {base} negative at j={j}")
        for k in range(length):
            e = base + f.step * k
            if e > order:
                break
            if e == 0 and f.sign == 1 and f.denominator:
                raise ZeroDivisionError(
                    f"denominator factor (1 - q^0) vanishes at j={j}"
                )
            apply_factor(coeffs, f.sign, e, divide=f.denominator)
    return coeffs


def _sum_terms(spec: SumSideSpec, order: int):
    """Yield (j, coefficient list) for every term that can contribute."""
    j = spec.start
    while True:
        lead = spec.lead.at(j)
        if lead < 0:
            raise ValueError(f"leading exponent {lead} negative at j={j}")
        if lead > order:
            if spec.lead.at(j + 1) >= lead:
                return  # past the vertex; no later term reaches the order
        else:
            yield j, _term_coeffs(spec, j, order)
        j += 1


def eval_sum_side(spec: SumSideSpec, order: int) -> Series | BiSeries:
    """Expand a sum side to the given order; a spec with an a-power per
    term yields a BiSeries, otherwise a Series."""
    if order < 0:
        raise ValueError("order must be non-negative")
    if not spec.lead.grows():
        raise ValueError("leading exponent does not grow; sum cannot terminate")
    if spec.a_power is None:
        total: list = [0] * (order + 1)
        for _j, term in _sum_terms(spec, order):
            for i, c in enumerate(term):
                if c:
                    total[i] += c
        return Series.from_coeffs(total, order)
    rows: list[list] = [[0] * (order + 1) for _ in range(order + 1)]
    for j, term in _sum_terms(spec, order):
        deg = spec.a_power.at(j)
        if deg < 0:
            raise ValueError(f"a-power {deg} negative at j={j}")
        if deg > order:
            continue
        row = rows[deg]
        for i, c in enumerate(term):
            if c:
                row[i] += c
    return BiSeries(
        order, tuple(Series.from_coeffs(r, order) for r in rows)
    )


def eval_product_side(spec: ProductSideSpec, order: int) -> Series:
    """Expand a product side to the given order, folding the atoms left to
    right; denominator atoms are divided out factor by factor."""
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs: list = [0] * (order + 1)
    coeffs[0] = 1
    for atom in spec.atoms:
        if isinstance(atom, PochInfAtom):
            if atom.base == 0 and atom.sign == 1:
                raise ValueError("infinite product with factor (1 - q^0) vanishes")
            if atom.base < 0 or atom.step < 1:
                raise ValueError("atom exponents out of range")
            e = atom.base
            first = True
            while e <= order or (first and e == 0):
                apply_factor(coeffs, atom.sign, e, divide=atom.denominator)
                e += atom.step
                first = False
        elif isinstance(atom, ResidueAtom):
            rset = {r % atom.modulus for r in atom.residues}
            for k in range(1, order + 1):
                if k % atom.modulus in rset:
                    apply_factor(coeffs, 1, k, divide=not atom.denominator)
        elif isinstance(atom, QuintupleAtom):
            q5 = quintuple_product(atom.w_exp, atom.x_exp, order)
            if atom.denominator:
                q5 = q5.recip()
            coeffs = list((Series.from_coeffs(coeffs, order) * q5).coeffs)
        elif isinstance(atom, MonomialAtom):
            if atom.exponent < 0:
                raise ValueError("monomial exponent must be non-negative")
            k = atom.exponent
            coeffs = [0] * k + coeffs[: order + 1 - k]
        elif isinstance(atom, ConstAtom):
            if atom.value == 0:
                raise ZeroDivisionError("zero constant atom")
            c = (
                Fraction(1, atom.value)
                if atom.denominator
                else Fraction(atom.value)
            )
            coeffs = [x * c if x else 0 for x in coeffs]
        else:  # pragma: no cover - exhaustive by construction
            raise TypeError(f"unknown atom {atom!r}")
    return Series.from_coeffs(coeffs, order)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def compare_series(
    name: str, order: int, lhs: Series, rhs: Series, start: float, shift: int = 0
) -> VerificationReport:
    """Coefficientwise comparison (lhs at n vs rhs at n - shift) with an
    integrality check on every compared coefficient."""
    mismatch = None
    for n in range(order + 1):
        lv = lhs.coeff(n)
        rv = rhs.coeff(n - shift) if n >= shift else Fraction(0)
        if lv != rv or lv.denominator != 1:
            mismatch = (n, lv, rv)
            break
    millis = int((time.perf_counter() - start) * 1000)
    return VerificationReport(name, order, mismatch is None, mismatch, millis)


def compare_biseries(
    name: str, order: int, lhs: BiSeries, rhs: BiSeries, start: float
) -> VerificationReport:
    mismatch = None
    a_deg = None
    for n in range(order + 1):
        for l in range(order + 1):
            lv = lhs.coeff(l, n)
            rv = rhs.coeff(l, n)
            if lv != rv or lv.denominator != 1:
                mismatch = (n, lv, rv)
                a_deg = l
                break
        if mismatch:
            break
    millis = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        name, order, mismatch is None, mismatch, millis, mismatch_a_deg=a_deg
    )


def verify_identity(spec: IdentitySpec, order: int) -> VerificationReport:
    """Expand both sides of a univariate identity and compare them
    coefficient by coefficient, reporting the first mismatch if any."""
    start = time.perf_counter()
    lhs = eval_sum_side(spec.lhs, order)
    if not isinstance(lhs, Series):
        raise ValueError("verify_identity expects a univariate sum side")
    rhs = eval_product_side(spec.rhs, order)
    return compare_series(spec.name, order, lhs, rhs, start, spec.rhs.shift)
