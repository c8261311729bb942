"""Exact truncated power-series arithmetic.

Two representations are provided:

``UniSeries``
    A power series in one variable x, truncated at a fixed order N
    (terms x^0 .. x^N are kept).  Coefficients are exact rationals
    (``fractions.Fraction``).  Dense storage: a tuple of N+1 coefficients.

``BiSeries``
    A power series in x whose coefficients are integer polynomials in a
    second variable q.  Truncation applies to x only; the q-degree is
    never truncated.  Storage is a tuple indexed by x-power, each entry a
    sparse map {q-power: nonzero int coefficient}.

Everything is exact: floating-point coefficients are rejected, and no
operation ever reads past the truncation order.  All values are
immutable after construction, so they can be shared freely between
threads or worker processes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Rational = Union[int, Fraction]


def _as_fraction(value: Rational) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not allowed in exact series")
    return Fraction(value)


class UniSeries:
    """Truncated univariate power series with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational], order: int | None = None):
        """Build a series from ``coeffs`` = [c0, c1, ...].

        If ``order`` is given, the coefficient list is padded with zeros or
        truncated so that exactly ``order + 1`` terms are kept; otherwise
        the order is ``len(coeffs) - 1``.
        """
        cs = [_as_fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            cs = cs[: order + 1]
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        elif not cs:
            raise ValueError("a series needs at least a constant term (or pass order=)")
        self._coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "UniSeries":
        return cls([], order=order)

    @classmethod
    def one(cls, order: int) -> "UniSeries":
        return cls([1], order=order)

    @classmethod
    def constant(cls, c: Rational, order: int) -> "UniSeries":
        return cls([c], order=order)

    @classmethod
    def x(cls, order: int) -> "UniSeries":
        return cls([0, 1], order=order)

    @classmethod
    def geometric(cls, c: Rational, order: int) -> "UniSeries":
        """1/(1 - c*x) = sum_n c^n x^n, truncated."""
        ratio = _as_fraction(c)
        term = Fraction(1)
        out = []
        for _ in range(order + 1):
            out.append(term)
            term *= ratio
        return cls(out)

    # -- inspection ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, n: int) -> Fraction:
        """Coefficient of x^n; reading past the truncation order is an error."""
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside truncation order {self.order}")
        return self._coeffs[n]

    def egf_coefficient(self, n: int) -> Fraction:
        """n! * [x^n], i.e. the value counted by an exponential generating function."""
        return self.coefficient(n) * math.factorial(n)

    def _require_same_order(self, other: "UniSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"series orders differ: {self.order} vs {other.order}")

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "UniSeries") -> "UniSeries":
        if not isinstance(other, UniSeries):
            return NotImplemented
        self._require_same_order(other)
        return UniSeries([a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: "UniSeries") -> "UniSeries":
        if not isinstance(other, UniSeries):
            return NotImplemented
        self._require_same_order(other)
        return UniSeries([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self) -> "UniSeries":
        return UniSeries([-a for a in self._coeffs])

    def scale(self, c: Rational) -> "UniSeries":
        f = _as_fraction(c)
        return UniSeries([a * f for a in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, UniSeries):
            self._require_same_order(other)
            n = self.order
            a, b = self._coeffs, other._coeffs
            out = [Fraction(0)] * (n + 1)
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for j in range(n + 1 - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
            return UniSeries(out)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def shift(self, m: int) -> "UniSeries":
        """Multiply by x^m (coefficients move up; the tail is truncated)."""
        if m < 0:
            raise ValueError("shift amount must be >= 0")
        out = [Fraction(0)] * m + list(self._coeffs)
        return UniSeries(out[: self.order + 1], order=self.order)

    def reciprocal(self) -> "UniSeries":
        """Multiplicative inverse through the truncation order.

        The constant term must be nonzero.
        """
        a = self._coeffs
        if a[0] == 0:
            raise ValueError("cannot invert a series with zero constant term")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, n + 1):
                if a[j]:
                    acc += a[j] * out[n - j]
            out.append(-inv0 * acc)
        return UniSeries(out)

    def exp(self) -> "UniSeries":
        """exp of a series with zero constant term.

        Uses the recurrence b' = a' * b for b = exp(a), which only needs
        exact rational arithmetic.
        """
        a = self._coeffs
        if a[0] != 0:
            raise ValueError("exp requires a zero constant term")
        out = [Fraction(1)]
        for n in range(self.order):
            # (n+1) * b_{n+1} = sum_{i=0..n} (i+1) * a_{i+1} * b_{n-i}
            acc = Fraction(0)
            for i in range(n + 1):
                ai = a[i + 1]
                if ai:
                    acc += (i + 1) * ai * out[n - i]
            out.append(acc / (n + 1))
        return UniSeries(out)

    # -- misc ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"UniSeries({[str(c) for c in self._coeffs]})"


class BiSeries:
    """Power series in x with exact integer polynomial coefficients in q.

    Truncated in x at a fixed order; q-powers are kept exactly (no q
    truncation).  Zero q-coefficients are never stored.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Mapping[int, int]], order: int | None = None):
        rows: list[dict[int, int]] = []
        for row in coeffs:
            clean: dict[int, int] = {}
            for s, c in row.items():
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError("BiSeries coefficients must be plain ints")
                if s < 0:
                    raise ValueError("q-powers must be >= 0")
                if c:
                    clean[s] = c
            rows.append(clean)
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            rows = rows[: order + 1]
            rows.extend({} for _ in range(order + 1 - len(rows)))
        elif not rows:
            raise ValueError("a series needs at least the x^0 row (or pass order=)")
        self._coeffs = tuple(rows)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "BiSeries":
        return cls([], order=order)

    @classmethod
    def one(cls, order: int) -> "BiSeries":
        return cls([{0: 1}], order=order)

    @classmethod
    def monomial(cls, coeff: int, xpow: int, qpow: int, order: int) -> "BiSeries":
        """coeff * x^xpow * q^qpow, truncated at ``order`` in x."""
        rows: list[dict[int, int]] = [{} for _ in range(order + 1)]
        if 0 <= xpow <= order and coeff:
            rows[xpow] = {qpow: coeff}
        return cls(rows)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, int]], order: int) -> "BiSeries":
        """Build from (x-power, q-power, coefficient) triples; like terms combine."""
        rows: list[dict[int, int]] = [{} for _ in range(order + 1)]
        for n, s, c in terms:
            if n < 0:
                raise ValueError("x-powers must be >= 0")
            if n <= order and c:
                rows[n][s] = rows[n].get(s, 0) + c
        return cls(rows, order=order)

    # -- inspection ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def q_coefficients(self, n: int) -> dict[int, int]:
        """The coefficient of x^n as a map {q-power: int}; zero entries omitted."""
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside truncation order {self.order}")
        return dict(self._coeffs[n])

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Yield (x-power, q-power, coefficient) triples in sorted order."""
        for n, row in enumerate(self._coeffs):
            for s in sorted(row):
                yield n, s, row[s]

    def _require_same_order(self, other: "BiSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"series orders differ: {self.order} vs {other.order}")

    # -- operations ----------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        self._require_same_order(other)
        order = self.order
        rows: list[dict[int, int]] = [{} for _ in range(order + 1)]
        for n1, row1 in enumerate(self._coeffs):
            if not row1:
                continue
            for n2 in range(order + 1 - n1):
                row2 = other._coeffs[n2]
                if not row2:
                    continue
                target = rows[n1 + n2]
                for s1, c1 in row1.items():
                    for s2, c2 in row2.items():
                        s = s1 + s2
                        v = target.get(s, 0) + c1 * c2
                        if v:
                            target[s] = v
                        elif s in target:
                            del target[s]
        return BiSeries(rows)

    def substitute_x_qpow(self, k: int) -> "BiSeries":
        """Substitute x -> x * q^k: each term (n, s, c) becomes (n, s + k*n, c)."""
        if k < 0:
            raise ValueError("substitution power must be >= 0")
        rows = [{s + k * n: c for s, c in row.items()} for n, row in enumerate(self._coeffs)]
        return BiSeries(rows)

    def q_weighted_sum(self) -> UniSeries:
        """Apply d/dq then set q = 1: the x^n coefficient becomes sum_s s * c_{n,s}.

        This is exact integer arithmetic packaged as a ``UniSeries``.
        """
        return UniSeries([sum(s * c for s, c in row.items()) for row in self._coeffs])

    # -- misc ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __repr__(self) -> str:
        parts = [f"({n},{s}):{c}" for n, s, c in self.terms()]
        return f"BiSeries(order={self.order}, terms={{{', '.join(parts)}}})"
