"""Bell and Stirling number tables and the closed-form weighted-record totals.

The total of the swrec statistic over all partitions of [n] has the exact
Bell-number form

    T(n) = 3/4*(B_{n+3} - B_{n+2}) - (n + 7/4)*B_{n+1} - (n+1)/2 * B_n

and is also the coefficient n! * [x^n] of the exponential generating
function

    W(x) = e^(e^x - 1) * (3/4 e^{3x} + 3/2 e^{2x} - 7/4 e^x
                          - x e^{2x} - 3/2 x e^x - 1/2).

This module builds exact integer tables of B_n and S(n,k) via the
triangular recurrences, constructs W(x) with exact rational series
arithmetic, and evaluates T(n).  Both routes are independent of the
enumeration oracle, which the tests compare them against.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .powerseries import UniSeries


def bell_numbers(max_n: int) -> list[int]:
    """B_0 .. B_max_n via the Bell triangle (exact integers)."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    bell = [1]
    row = [1]
    for _ in range(max_n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        bell.append(nxt[0])
        row = nxt
    return bell


def stirling_triangle(max_n: int) -> list[list[int]]:
    """Rows S(n, 0..n) for n = 0 .. max_n, S of the second kind.

    S(n,k) = k*S(n-1,k) + S(n-1,k-1), S(0,0) = 1.
    """
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    rows = [[1]]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for kk in range(1, n + 1):
            above = prev[kk] if kk < n else 0
            row[kk] = kk * above + prev[kk - 1]
        rows.append(row)
    return rows


@dataclass(frozen=True)
class BellStirlingTables:
    """Immutable exact tables of Bell numbers and Stirling numbers (2nd kind).

    The Stirling triangle may be capped lower than the Bell sequence: the
    triangle needs O(max_n^2) big integers, which is wasteful when only
    large Bell numbers are wanted (asymptotics at n ~ 1000).
    """

    bell: tuple[int, ...]
    stirling: tuple[tuple[int, ...], ...]

    @property
    def max_n(self) -> int:
        return len(self.bell) - 1

    @property
    def stirling_max_n(self) -> int:
        return len(self.stirling) - 1

    def bell_number(self, n: int) -> int:
        if not 0 <= n <= self.max_n:
            raise ValueError(f"B_{n} not tabulated (max_n={self.max_n})")
        return self.bell[n]

    def stirling_number(self, n: int, k: int) -> int:
        if not 0 <= n <= self.stirling_max_n:
            raise ValueError(f"S({n},k) not tabulated (stirling_max_n={self.stirling_max_n})")
        if not 0 <= k <= n:
            return 0
        return self.stirling[n][k]


def build_tables(max_n: int, stirling_max_n: int | None = None) -> BellStirlingTables:
    """Exact tables with B_0..B_max_n and Stirling rows 0..stirling_max_n
    (defaulting to max_n)."""
    s_max = max_n if stirling_max_n is None else stirling_max_n
    if s_max > max_n:
        raise ValueError("stirling_max_n cannot exceed max_n")
    return BellStirlingTables(
        bell=tuple(bell_numbers(max_n)),
        stirling=tuple(tuple(r) for r in stirling_triangle(s_max)),
    )


# ---------------------------------------------------------------------------
# Exponential generating functions
# ---------------------------------------------------------------------------


def bell_egf(order: int, tables: BellStirlingTables) -> UniSeries:
    """sum_n B_n x^n / n!, built from the integer table (not by series exp)."""
    if tables.max_n < order:
        raise ValueError(f"tables cover n <= {tables.max_n}, need {order}")
    return UniSeries([Fraction(tables.bell[n], math.factorial(n)) for n in range(order + 1)])


def _exp_cx(c: int, order: int) -> UniSeries:
    """e^{c x} as an exact series."""
    return UniSeries.x(order).scale(c).exp()


def egf_w(order: int, tables: BellStirlingTables) -> UniSeries:
    """The aggregate EGF W(x) whose coefficients n![x^n] are the total of
    swrec over all partitions of [n].

    W(x) = BellEGF(x) * (3/4 e^{3x} + 3/2 e^{2x} - 7/4 e^x
                         - x e^{2x} - 3/2 x e^x - 1/2)
    """
    if tables.max_n < order + 3:
        raise ValueError(f"tables must cover order+3 = {order + 3}, have {tables.max_n}")
    e1 = _exp_cx(1, order)
    e2 = _exp_cx(2, order)
    e3 = _exp_cx(3, order)
    bracket = (
        e3.scale(Fraction(3, 4))
        + e2.scale(Fraction(3, 2))
        - e1.scale(Fraction(7, 4))
        - e2.shift(1)
        - e1.shift(1).scale(Fraction(3, 2))
        - UniSeries.constant(Fraction(1, 2), order)
    )
    return bell_egf(order, tables) * bracket


def shifted_bell_series(j: int, order: int, tables: BellStirlingTables) -> UniSeries:
    """e^{j x} * BellEGF(x) for j in 0..3.

    Its n-th EGF coefficient is the Bell combination given by
    ``shifted_bell_coefficient``; the tests check that identity.
    """
    if not 0 <= j <= 3:
        raise ValueError("j must be in 0..3")
    if tables.max_n < order + j:
        raise ValueError(f"tables must cover order+j = {order + j}, have {tables.max_n}")
    return bell_egf(order, tables) * _exp_cx(j, order)


def shifted_bell_coefficient(j: int, n: int, tables: BellStirlingTables) -> int:
    """The Bell combination equal to n! * [x^n] e^{jx} BellEGF(x), j in 0..3."""
    b = tables.bell
    if n + j > tables.max_n:
        raise ValueError(f"need B_{n + j}, tables stop at {tables.max_n}")
    if j == 0:
        return b[n]
    if j == 1:
        return b[n + 1]
    if j == 2:
        return b[n + 2] - b[n + 1]
    if j == 3:
        return b[n + 3] - 3 * b[n + 2] + 2 * b[n + 1]
    raise ValueError("j must be in 0..3")


def total_swrec_formula(n: int, tables: BellStirlingTables) -> int:
    """Exact total of swrec over all partitions of [n], from Bell numbers.

    The rational combination always reduces to an integer; a non-integral
    result would mean the tables are corrupt, and raises ArithmeticError.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if tables.max_n < n + 3:
        raise ValueError(f"tables must cover n+3 = {n + 3}, have {tables.max_n}")
    b = tables.bell
    value = (
        Fraction(3, 4) * (b[n + 3] - b[n + 2])
        - (n + Fraction(7, 4)) * b[n + 1]
        - Fraction(n + 1, 2) * b[n]
    )
    if value.denominator != 1:
        raise ArithmeticError(f"total for n={n} is not an integer: {value}")
    return value.numerator


# ---------------------------------------------------------------------------
# Optional Bell-number cache (one "<n> <B_n>" line per value)
# ---------------------------------------------------------------------------

BELL_CACHE_FILENAME = "bell.txt"


def write_bell_cache(path: str, bell: list[int] | tuple[int, ...]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for n, b in enumerate(bell):
            fh.write(f"{n} {b}\n")


def read_bell_cache(path: str) -> list[int]:
    """Parse a cache file; raises ValueError on any malformed content."""
    bell: list[int] = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            n_str, b_str = line.split()
            if int(n_str) != len(bell):
                raise ValueError(f"cache lines out of order at n={n_str}")
            bell.append(int(b_str))
    if not bell:
        raise ValueError("empty cache file")
    return bell


def load_or_build_tables(
    max_n: int,
    cache_dir: str | None = None,
    stirling_max_n: int | None = None,
) -> BellStirlingTables:
    """Like ``build_tables`` but reading/writing the plain-text Bell cache
    when ``cache_dir`` is given.  A missing, short, or unreadable cache is
    simply rebuilt (and rewritten)."""
    bell: list[int] | None = None
    cache_path = None
    if cache_dir is not None:
        cache_path = os.path.join(cache_dir, BELL_CACHE_FILENAME)
        try:
            cached = read_bell_cache(cache_path)
            if len(cached) >= max_n + 1:
                bell = cached[: max_n + 1]
        except (OSError, ValueError):
            bell = None
    if bell is None:
        bell = bell_numbers(max_n)
        if cache_path is not None:
            os.makedirs(cache_dir, exist_ok=True)
            write_bell_cache(cache_path, bell)
    s_max = max_n if stirling_max_n is None else stirling_max_n
    return BellStirlingTables(
        bell=tuple(bell),
        stirling=tuple(tuple(r) for r in stirling_triangle(s_max)),
    )
