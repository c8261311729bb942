"""Bell/Stirling tables, the aggregate EGF, and the exact total formula."""

import math
from fractions import Fraction

import pytest

from partition_records import (
    UniSeries,
    bell_egf,
    bell_numbers,
    build_tables,
    egf_w,
    enumerate_rgs,
    load_or_build_tables,
    shifted_bell_coefficient,
    shifted_bell_series,
    total_swrec_bruteforce,
    total_swrec_formula,
)
from partition_records.closedform import read_bell_cache, write_bell_cache


def test_bell_small_values():
    assert bell_numbers(5) == [1, 1, 2, 5, 15, 52]


def test_bell_binomial_recurrence(tables):
    # B_{n+1} = sum_j C(n,j) B_j, an independent identity on the table
    for n in range(20):
        assert tables.bell_number(n + 1) == sum(
            math.comb(n, j) * tables.bell_number(j) for j in range(n + 1)
        )


def test_stirling_values(tables):
    assert tables.stirling_number(4, 2) == 7
    assert tables.stirling_number(4, 2) == sum(1 for _ in enumerate_rgs(4, 2))
    for n in range(1, 20):
        assert tables.stirling_number(n, n) == 1
        assert tables.stirling_number(n, 1) == 1


def test_bell_is_row_sum_of_stirling(tables):
    for n in range(tables.stirling_max_n + 1):
        assert tables.bell_number(n) == sum(
            tables.stirling_number(n, k) for k in range(n + 1)
        )


def test_build_tables_caps():
    t = build_tables(50, stirling_max_n=10)
    assert t.max_n == 50 and t.stirling_max_n == 10
    with pytest.raises(ValueError):
        t.stirling_number(11, 2)
    with pytest.raises(ValueError):
        t.bell_number(51)
    with pytest.raises(ValueError):
        build_tables(5, stirling_max_n=6)


def test_bell_egf_matches_series_exponential(tables):
    order = 30
    inner = UniSeries([0] + [Fraction(1, math.factorial(n)) for n in range(1, order + 1)])
    assert inner.exp() == bell_egf(order, tables)


def test_egf_w_small_coefficients(tables):
    w = egf_w(6, tables)
    assert w.egf_coefficient(0) == 0
    assert w.egf_coefficient(1) == 1
    assert w.egf_coefficient(3) == 32 == total_swrec_bruteforce(3)


def test_egf_w_requires_headroom():
    small = build_tables(8)
    with pytest.raises(ValueError):
        egf_w(6, small)


def test_shifted_bell_identities(tables):
    order = 25
    for j in range(4):
        series = shifted_bell_series(j, order, tables)
        for n in range(order + 1):
            assert series.egf_coefficient(n) == shifted_bell_coefficient(j, n, tables)


def test_shifted_bell_j0_is_bell(tables):
    series = shifted_bell_series(0, 12, tables)
    for n in range(13):
        assert series.egf_coefficient(n) == tables.bell_number(n)


def test_shifted_bell_rejects_bad_j(tables):
    with pytest.raises(ValueError):
        shifted_bell_series(4, 10, tables)
    with pytest.raises(ValueError):
        shifted_bell_coefficient(5, 3, tables)


def test_total_formula_values(tables):
    assert total_swrec_formula(0, tables) == 0
    assert total_swrec_formula(1, tables) == 1
    assert total_swrec_formula(2, tables) == 6
    assert total_swrec_formula(10, tables) == 8962070


def test_total_formula_matches_bruteforce(tables):
    for n in range(9):
        assert total_swrec_formula(n, tables) == total_swrec_bruteforce(n)


def test_total_formula_is_always_integral(tables):
    for n in range(501):
        assert isinstance(total_swrec_formula(n, tables), int)


def test_total_formula_needs_tables():
    small = build_tables(4)
    with pytest.raises(ValueError):
        total_swrec_formula(2, small)


# ---------------------------------------------------------------------------
# cache file
# ---------------------------------------------------------------------------


def test_cache_round_trip(tmp_path):
    path = tmp_path / "bell.txt"
    bell = bell_numbers(12)
    write_bell_cache(str(path), bell)
    assert read_bell_cache(str(path)) == bell
    text = path.read_text()
    assert text.splitlines()[3] == "3 5"


def test_load_or_build_writes_then_reads(tmp_path):
    cache_dir = str(tmp_path)
    t1 = load_or_build_tables(10, cache_dir=cache_dir)
    cache_file = tmp_path / "bell.txt"
    assert cache_file.exists()
    before = cache_file.read_text()
    t2 = load_or_build_tables(8, cache_dir=cache_dir)  # shorter: reuse the file
    assert cache_file.read_text() == before
    assert t2.bell == t1.bell[:9]


def test_load_or_build_rebuilds_on_corrupt_cache(tmp_path):
    (tmp_path / "bell.txt").write_text("0 1\n5 nonsense\n")
    t = load_or_build_tables(6, cache_dir=str(tmp_path))
    assert t.bell == tuple(bell_numbers(6))
    assert read_bell_cache(str(tmp_path / "bell.txt")) == bell_numbers(6)


def test_load_or_build_without_cache_dir():
    t = load_or_build_tables(6)
    assert t.bell == tuple(bell_numbers(6))
