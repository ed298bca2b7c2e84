"""Closed-formula tests: frozen instances plus the structural invariants.

The invariant grids (d up to 200, k+l up to 14) mirror the ranges the
formulas are certified on elsewhere; they run in well under a second
because every check is arithmetic.
"""

import math

import pytest

from klsf.arith import ceil_div, divisors
from klsf.errors import OutOfRange
from klsf.formulas import (
    interval_feasible,
    max_interval_size,
    min_additive_pairs,
    mu_abelian_lower,
    mu_bounds,
    mu_cyclic,
    mu_prime,
)
from klsf.groups import AbelianGroup


def pair_grid(max_sum):
    return [(k, l) for k in range(2, max_sum) for l in range(1, k) if k + l <= max_sum]


def test_interval_feasible_frozen():
    assert interval_feasible(9, 5, 2, 2)
    assert not interval_feasible(9, 5, 2, 3)
    assert interval_feasible(7, 2, 1, 2)
    assert interval_feasible(5, 2, 1, 0)
    with pytest.raises(ValueError):
        interval_feasible(9, 2, 2, 1)


def test_max_interval_size_frozen():
    cap = max_interval_size(9, 5, 2)
    assert (cap.size, cap.delta, cap.base, cap.remainder) == (2, 3, 1, 2)
    assert max_interval_size(1, 5, 2).size == 0
    assert max_interval_size(10, 2, 1).size == 3


def test_max_interval_size_is_largest_feasible():
    for d in range(1, 201):
        for k, l in pair_grid(14):
            m0 = max_interval_size(d, k, l).size
            assert interval_feasible(d, k, l, m0)
            assert not interval_feasible(d, k, l, m0 + 1)


def test_feasibility_is_monotone():
    for d in range(1, 201, 7):
        for k, l in pair_grid(14):
            flags = [interval_feasible(d, k, l, m) for m in range(1, d + 2)]
            assert all(a or not b for a, b in zip(flags, flags[1:]))


def test_interval_size_global_bounds():
    for d in range(1, 201):
        for k, l in pair_grid(14):
            cap = max_interval_size(d, k, l)
            assert d // (k + l) <= cap.size <= ceil_div(d - 1, k + l)
            assert cap.base <= cap.size <= cap.base + 1
            assert 1 <= cap.delta - cap.remainder <= cap.delta
            assert (cap.size == 0) == (d == 1 or (k - l) % d == 0)


def test_mu_cyclic_frozen():
    report = mu_cyclic(9, 5, 2)
    assert report.mu == 2
    assert report.best_divisor == 9
    assert (report.lower_bound, report.upper_bound) == (1, 3)
    assert mu_cyclic(12, 13, 1).mu == 0
    ten = mu_cyclic(10, 2, 1)
    assert (ten.mu, ten.best_divisor) == (5, 2)


def test_mu_report_table_is_consistent():
    for n in (9, 10, 12, 30):
        report = mu_cyclic(n, 5, 2)
        assert [row.d for row in report.rows] == divisors(n)
        assert report.mu == max(row.contribution for row in report.rows)
        for row in report.rows:
            assert row.contribution == row.interval_max * (n // row.d)


def test_mu_bounds_frozen():
    assert mu_bounds(9, 5, 2) == (1, 3)
    assert mu_bounds(7, 3, 1) == (2, 2)
    lower, upper = mu_bounds(12, 13, 1)
    assert lower == 0 and upper >= 0


def test_zero_characterization():
    for n in range(1, 40):
        for k, l in pair_grid(9):
            assert (mu_cyclic(n, k, l).mu == 0) == ((k - l) % n == 0)


def test_sandwich_on_grid():
    for n in range(1, 60):
        for k, l in pair_grid(9):
            lower, upper = mu_bounds(n, k, l)
            assert lower <= mu_cyclic(n, k, l).mu <= upper


def test_coprime_specialization():
    for n in range(1, 80):
        for k, l in pair_grid(9):
            if math.gcd(n, k - l) != 1:
                continue
            expected = max(ceil_div(d - 1, k + l) * (n // d) for d in divisors(n))
            assert mu_cyclic(n, k, l).mu == expected


def test_divisor_lifting_inequality():
    for n in range(1, 73):
        for k, l in [(2, 1), (4, 3), (5, 2)]:
            mu_n = mu_cyclic(n, k, l).mu
            for d in divisors(n):
                assert mu_n >= mu_cyclic(d, k, l).mu * (n // d)


def test_mu_prime_frozen():
    assert mu_prime(7, 3, 1) == 2
    assert mu_prime(5, 6, 1) == 0
    assert mu_prime(3, 2, 1) == 1
    with pytest.raises(ValueError):
        mu_prime(8, 2, 1)


def test_mu_prime_agrees_with_mu_cyclic():
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        for k, l in pair_grid(9):
            assert mu_prime(p, k, l) == mu_cyclic(p, k, l).mu


def test_mu_abelian_lower_frozen():
    assert mu_abelian_lower(AbelianGroup((2, 4)), 2, 1) == (4, True)
    assert mu_abelian_lower(AbelianGroup((5, 5)), 2, 1) == (10, True)
    assert mu_abelian_lower(AbelianGroup(()), 2, 1) == (0, True)


def test_mu_abelian_lower_cyclic_case_matches_mu():
    for n in range(1, 40):
        bound, _ = mu_abelian_lower(AbelianGroup((n,)) if n > 1 else AbelianGroup(()), 2, 1)
        assert bound == mu_cyclic(n, 2, 1).mu


def test_min_additive_pairs_frozen():
    assert min_additive_pairs(7, 4) == 6
    assert min_additive_pairs(7, 7) == 49
    assert min_additive_pairs(7, 2) == 0
    with pytest.raises(ValueError):
        min_additive_pairs(8, 3)
    with pytest.raises(OutOfRange):
        min_additive_pairs(7, 8)
    with pytest.raises(OutOfRange):
        min_additive_pairs(7, 0)


def test_min_additive_pairs_zero_exactly_up_to_mu():
    for p in (5, 7, 11, 13):
        threshold = mu_prime(p, 2, 1)
        for m in range(1, p + 1):
            value = min_additive_pairs(p, m)
            assert (value == 0) == (m <= threshold)
            if m > threshold:
                assert value == (3 * m - p) ** 2 // 4
