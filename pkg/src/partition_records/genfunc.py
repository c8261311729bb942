"""Generating functions for the weighted-record statistic on set partitions.

Let G_k(x, q) track partitions with exactly k blocks: the coefficient of
x^n q^s counts words in P_{n,k} with swrec = s.  Two independent
constructions are provided:

``gf_product``
    the closed product over block indices i = 1..k of

        x * q^(i + (k+1-i)(k-i)) / (1 - i*x*q^(T_i)),   T_i = (i+1) + ... + k,

    with each factor expanded as a geometric series in x;

``gf_recurrence``
    iterating G_k(x,q) = x q^k / (1 - k x) * G_{k-1}(x q^k, q) from
    G_1(x,q) = x q / (1 - x).

Differentiating with respect to q and setting q = 1 turns G_k into the
ordinary generating function of the per-size swrec totals.  That series
has the rational closed form implemented by ``total_swrec_series``; its
x -> 1/y transform has only double poles at y = 1..k and decomposes into
partial fractions with explicit coefficient families (``partial_fraction_coeffs``).
``pole_expansion_coeffs`` recovers the same coefficients by an exact
two-term Taylor expansion at each pole, independent of those explicit
formulas, so either side can catch a transcription error in the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .powerseries import BiSeries, Rational, UniSeries


def gf_product(k: int, order: int) -> BiSeries:
    """G_k(x, q) built from the k-factor product, truncated at x^order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    result = BiSeries.one(order)
    for i in range(1, k + 1):
        base = i + (k + 1 - i) * (k - i)  # q-power carried by the record itself
        step = sum(range(i + 1, k + 1))  # q-power per extra letter from 1/(1 - i x q^step)
        factor = BiSeries.from_terms(
            ((j + 1, base + j * step, i**j) for j in range(order)), order
        )
        result = result * factor
    return result


def gf_recurrence(k: int, order: int) -> BiSeries:
    """G_k(x, q) built by iterating the block recurrence from G_1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    # G_1 = x q / (1 - x)
    g = BiSeries.from_terms(((j + 1, 1, 1) for j in range(order)), order)
    for kk in range(2, k + 1):
        shifted = g.substitute_x_qpow(kk)
        # x q^kk / (1 - kk x)
        front = BiSeries.from_terms(((j + 1, kk, kk**j) for j in range(order)), order)
        g = front * shifted
    return g


def total_swrec_series(k: int, order: int) -> UniSeries:
    """Ordinary generating function of sum(swrec over P_{n,k}) in x.

    Equals d/dq G_k(x,q) at q = 1:

        x^k * (C(k+1,2) + 2 C(k+1,3)) / ((1-x)...(1-kx))
        + x^(k+1) / ((1-x)...(1-kx)) * sum_i i(i+1+k)(k-i) / (2(1-ix))
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    denom = UniSeries.one(order)
    for i in range(1, k + 1):
        denom = denom * UniSeries([1, -i], order=order)
    recip = denom.reciprocal()

    head = math.comb(k + 1, 2) + 2 * math.comb(k + 1, 3)
    term1 = recip.scale(head).shift(k)

    inner = UniSeries.zero(order)
    for i in range(1, k + 1):
        c = Fraction(i * (i + 1 + k) * (k - i), 2)
        if c:
            inner = inner + UniSeries.geometric(i, order).scale(c)
    term2 = (recip * inner).shift(k + 1)
    return term1 + term2


def total_swrec_rational(k: int, y: Rational) -> Fraction:
    """The same per-k total generating function, transformed by x -> 1/y and
    evaluated exactly at the rational point y (poles 1..k are rejected):

        prod_i (y-i)^(-1) * ( k(k+1)(2k+1)/6 + sum_i i(1+k+i)(k-i) / (2(y-i)) )
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    y = Fraction(y)
    if y.denominator == 1 and 1 <= y.numerator <= k:
        raise ValueError(f"y={y} is a pole (integers 1..{k} are excluded)")
    prod = Fraction(1)
    bracket = Fraction(k * (k + 1) * (2 * k + 1), 6)
    for i in range(1, k + 1):
        prod *= y - i
        bracket += Fraction(i * (1 + k + i) * (k - i), 2) / (y - i)
    return bracket / prod


@dataclass(frozen=True)
class PartialFractionDecomposition:
    """Coefficients of sum_m [ a_m/(y-m)^2 + b_m/(y-m) ] for fixed k."""

    k: int
    a: Mapping[int, Fraction]
    b: Mapping[int, Fraction]


def partial_fraction_coeffs(k: int) -> PartialFractionDecomposition:
    """The explicit coefficient families of the decomposition:

        a_m = (-1)^(k-m) m (1+k+m) (k-m) / (2 (m-1)! (k-m)!)
        b_m = (-1)^(k-m) (k^2 (m/4+1) + k (m^2/2 + 3m/4 + 1)
                          - (3 m^2/2 + m)) / ((m-1)! (k-m)!)

    Note a_k = 0 always (the k-m factor vanishes).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    a: dict[int, Fraction] = {}
    b: dict[int, Fraction] = {}
    for m in range(1, k + 1):
        sign = -1 if (k - m) % 2 else 1
        denom = math.factorial(m - 1) * math.factorial(k - m)
        a[m] = Fraction(sign * m * (1 + k + m) * (k - m), 2 * denom)
        poly = (
            k * k * (Fraction(m, 4) + 1)
            + k * (Fraction(m * m, 2) + Fraction(3 * m, 4) + 1)
            - (Fraction(3 * m * m, 2) + m)
        )
        b[m] = sign * poly / denom
    return PartialFractionDecomposition(k=k, a=a, b=b)


def partial_fraction_eval(d: PartialFractionDecomposition, y: Rational) -> Fraction:
    """Evaluate the decomposition at a non-pole rational point y."""
    y = Fraction(y)
    if y.denominator == 1 and 1 <= y.numerator <= d.k:
        raise ValueError(f"y={y} is a pole (integers 1..{d.k} are excluded)")
    total = Fraction(0)
    for m in range(1, d.k + 1):
        dy = y - m
        total += d.a[m] / (dy * dy) + d.b[m] / dy
    return total


def pole_expansion_coeffs(k: int, m: int) -> tuple[Fraction, Fraction]:
    """(a_m, b_m) recovered from the rational function itself.

    Writes y = m + t, multiplies out the double pole, and expands

        G(t) = t^2 * R_k(m+t)
             = prod_{i != m} (m-i+t)^(-1)
               * ( C t + d_m + sum_{i != m} d_i * t / (m-i+t) )

    with C = k(k+1)(2k+1)/6 and d_i = i(1+k+i)(k-i)/2, as an exact
    rational series in t.  Then a_m = G(0) and b_m = G'(0): the first two
    Taylor coefficients.  No use is made of the explicit formulas in
    ``partial_fraction_coeffs``, so the two can cross-check each other.
    """
    if not 1 <= m <= k:
        raise ValueError("m must be in 1..k")
    order = 1  # two-term Taylor expansion suffices for a and b
    big_c = Fraction(k * (k + 1) * (2 * k + 1), 6)

    def d_coeff(i: int) -> Fraction:
        return Fraction(i * (1 + k + i) * (k - i), 2)

    prod = UniSeries.one(order)
    inner = UniSeries([d_coeff(m), big_c], order=order)
    for i in range(1, k + 1):
        if i == m:
            continue
        rec = UniSeries([m - i, 1], order=order).reciprocal()
        prod = prod * rec
        inner = inner + rec.shift(1).scale(d_coeff(i))
    g = prod * inner
    return g.coefficient(0), g.coefficient(1)
