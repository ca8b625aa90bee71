"""Exact truncated formal power series in q, univariate and bivariate.

A ``Series`` of order N stores the coefficients of q^0..q^N as exact
rationals and represents a formal power series modulo q^(N+1).  All ring
operations between series of equal order are exact on that window; mixing
orders is an error rather than an implicit promotion.

``BiSeries`` adds a second variable ``a`` whose degree is capped at the
q-order N.  Row l holds the coefficients of a^l q^n.  Every bivariate
series built in this package has each power of a accompanied by at least
one power of q (row l vanishes below q^l), so capping the a-degree at N
discards nothing of q-degree <= N; ``is_triangular`` checks the property.

Values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Coeff = Fraction
CoeffLike = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _freeze(values: Iterable[CoeffLike], order: int) -> tuple[Fraction, ...]:
    out = [_ZERO] * (order + 1)
    for i, v in enumerate(values):
        if i > order:
            break
        if v:
            out[i] = v if type(v) is Fraction else Fraction(v)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class Series:
    """Univariate power series in q, truncated at ``order``."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("truncation order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient tuple must have length order+1")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_coeffs(cls, values: Iterable[CoeffLike], order: int) -> Series:
        """Series with the given low coefficients; long input is truncated,
        short input is zero-filled."""
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        return cls(order, _freeze(values, order))

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls.from_coeffs((), order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls.from_coeffs((1,), order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: CoeffLike = 1) -> Series:
        """coeff * q^exponent (zero when exponent exceeds the order)."""
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        out = [_ZERO] * (order + 1)
        if exponent <= order:
            out[exponent] = Fraction(coeff)
        return cls(order, tuple(out))

    # -- queries -------------------------------------------------------

    def coeff(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside 0..{self.order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    # -- ring operations -----------------------------------------------

    def _check_order(self, other: Series) -> None:
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: Series) -> Series:
        self._check_order(other)
        return Series(
            self.order,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: Series) -> Series:
        self._check_order(other)
        return Series(
            self.order,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> Series:
        return Series(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: Series | CoeffLike) -> Series:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_order(other)
        n = self.order
        out = [_ZERO] * (n + 1)
        b = other.coeffs
        for i, ci in enumerate(self.coeffs):
            if not ci:
                continue
            for k in range(n + 1 - i):
                bk = b[k]
                if bk:
                    out[i + k] += ci * bk
        return Series(n, tuple(out))

    def __rmul__(self, other: CoeffLike) -> Series:
        return self.scale(other)

    def scale(self, c: CoeffLike) -> Series:
        c = Fraction(c)
        if not c:
            return Series.zero(self.order)
        return Series(self.order, tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> Series:
        """Multiply by q^k, truncating at the order."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        if k == 0:
            return self
        n = self.order
        out = [_ZERO] * (n + 1)
        for i in range(n + 1 - k):
            out[i + k] = self.coeffs[i]
        return Series(n, tuple(out))

    def recip(self) -> Series:
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series has zero constant term")
        n = self.order
        inv0 = _ONE / c0
        out = [_ZERO] * (n + 1)
        out[0] = inv0
        s = self.coeffs
        for m in range(1, n + 1):
            acc = _ZERO
            for k in range(1, m + 1):
                sk = s[k]
                if sk:
                    acc += sk * out[m - k]
            out[m] = -inv0 * acc
        return Series(n, tuple(out))

    def truncate(self, m: int) -> Series:
        """Lower the order to m <= order, keeping the prefix."""
        if not 0 <= m <= self.order:
            raise ValueError(f"new order {m} outside 0..{self.order}")
        return Series(m, self.coeffs[: m + 1])

    # -- display ---------------------------------------------------------

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*q" if c != 1 else "q")
            else:
                terms.append(f"{c}*q^{i}" if c != 1 else f"q^{i}")
            if len(terms) >= 8:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"Series[N={self.order}]({body})"


@dataclass(frozen=True, slots=True)
class BiSeries:
    """Bivariate power series in a and q, truncated at q-order ``order``
    and a-degree ``order``.  Row l is the Series of coefficients of a^l."""

    order: int
    rows: tuple[Series, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("truncation order must be non-negative")
        if len(self.rows) != self.order + 1:
            raise ValueError("row tuple must have length order+1")
        for row in self.rows:
            if row.order != self.order:
                raise ValueError("every row must share the q-order")

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Series], order: int) -> BiSeries:
        out = [Series.zero(order)] * (order + 1)
        for i, row in enumerate(rows):
            if i > order:
                break
            if row.order != order:
                raise ValueError("row order mismatch")
            out[i] = row
        return cls(order, tuple(out))

    @classmethod
    def zero(cls, order: int) -> BiSeries:
        return cls.from_rows((), order)

    @classmethod
    def one(cls, order: int) -> BiSeries:
        return cls.from_rows((Series.one(order),), order)

    @classmethod
    def monomial(
        cls, a_exp: int, q_exp: int, order: int, coeff: CoeffLike = 1
    ) -> BiSeries:
        """coeff * a^a_exp * q^q_exp (zero when either exponent overflows)."""
        if a_exp < 0 or q_exp < 0:
            raise ValueError("exponents must be non-negative")
        rows = [Series.zero(order)] * (order + 1)
        if a_exp <= order:
            rows[a_exp] = Series.monomial(q_exp, order, coeff)
        return cls(order, tuple(rows))

    @classmethod
    def from_series(cls, s: Series) -> BiSeries:
        """Embed a univariate series as the a^0 row."""
        return cls.from_rows((s,), s.order)

    # -- queries ----------------------------------------------------------

    def coeff(self, a_deg: int, n: int) -> Fraction:
        if not 0 <= a_deg <= self.order:
            raise IndexError(f"a-degree {a_deg} outside 0..{self.order}")
        return self.rows[a_deg].coeff(n)

    def is_zero(self) -> bool:
        return all(row.is_zero() for row in self.rows)

    def is_triangular(self) -> bool:
        """True when row l has no coefficient below q^l, the property that
        makes the a-degree cap lossless."""
        for l, row in enumerate(self.rows):
            if any(row.coeffs[:l]):
                return False
        return True

    def eval_a1(self) -> Series:
        """Substitute a = 1 by summing the rows."""
        out = [_ZERO] * (self.order + 1)
        for row in self.rows:
            for i, c in enumerate(row.coeffs):
                if c:
                    out[i] += c
        return Series(self.order, tuple(out))

    def subst_aq(self, k: int) -> BiSeries:
        """Replace a by a*q^k: row l is shifted by q^(k*l)."""
        if k <= 0:
            raise ValueError("substitution power must be positive")
        rows = []
        for l, row in enumerate(self.rows):
            s = k * l
            if s > self.order:
                rows.append(Series.zero(self.order))
            else:
                rows.append(row.shift(s))
        return BiSeries(self.order, tuple(rows))

    # -- ring operations ----------------------------------------------------

    def _check_order(self, other: BiSeries) -> None:
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: BiSeries) -> BiSeries:
        self._check_order(other)
        return BiSeries(
            self.order,
            tuple(a + b for a, b in zip(self.rows, other.rows)),
        )

    def __sub__(self, other: BiSeries) -> BiSeries:
        self._check_order(other)
        return BiSeries(
            self.order,
            tuple(a - b for a, b in zip(self.rows, other.rows)),
        )

    def __neg__(self) -> BiSeries:
        return BiSeries(self.order, tuple(-row for row in self.rows))

    def __mul__(self, other: BiSeries | CoeffLike) -> BiSeries:
        if isinstance(other, (int, Fraction)):
            return BiSeries(
                self.order, tuple(row.scale(other) for row in self.rows)
            )
        self._check_order(other)
        n = self.order
        acc: list[list[Fraction]] = [[_ZERO] * (n + 1) for _ in range(n + 1)]
        for l1, row1 in enumerate(self.rows):
            a = row1.coeffs
            if not any(a):
                continue
            for l2 in range(n + 1 - l1):
                b = other.rows[l2].coeffs
                out = acc[l1 + l2]
                for i, ci in enumerate(a):
                    if not ci:
                        continue
                    for k in range(n + 1 - i):
                        bk = b[k]
                        if bk:
                            out[i + k] += ci * bk
        return BiSeries(n, tuple(Series(n, tuple(r)) for r in acc))

    def __rmul__(self, other: CoeffLike) -> BiSeries:
        return self.__mul__(other)

    def recip(self) -> BiSeries:
        """Inverse with respect to bivariate multiplication; requires the
        a^0 q^0 coefficient to be nonzero."""
        if not self.rows[0].coeffs[0]:
            raise ZeroDivisionError("constant coefficient (a^0 q^0) is zero")
        n = self.order
        r0 = self.rows[0].recip()
        out = [r0]
        for l in range(1, n + 1):
            acc = Series.zero(n)
            for m in range(1, l + 1):
                sm = self.rows[m]
                if sm.is_zero():
                    continue
                acc = acc + sm * out[l - m]
            out.append(-(r0 * acc))
        return BiSeries(n, tuple(out))

    def __repr__(self) -> str:
        nonzero = [l for l, row in enumerate(self.rows) if not row.is_zero()]
        return f"BiSeries[N={self.order}](rows a^{nonzero[:6]}...)"
