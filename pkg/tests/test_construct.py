"""Constructor tests: interval witnesses, certificates, special fixtures."""

import math

import pytest

from klsf.arith import ceil_div
from klsf.construct import (
    max_interval,
    max_witness_cyclic,
    middle_set,
    two_short_of_ap,
    witness_with_certificate,
)
from klsf.errors import NoWitness, OutOfRange
from klsf.formulas import max_interval_size, mu_cyclic
from klsf.sumsets import is_kl_sumfree


def test_max_interval_worked_instance():
    interval, cert = max_interval(9, 5, 2)
    assert (interval.start, interval.length) == (1, 2)
    assert list(interval.to_set()) == [1, 2]
    assert (cert.c, cert.a, cert.delta) == (1, 1, 3)
    assert cert.verify()


def test_max_interval_length_three():
    interval, cert = max_interval(10, 2, 1)
    a = interval.to_set()
    assert len(a) == 3
    assert is_kl_sumfree(a, 2, 1)
    assert cert.verify()


def test_max_interval_no_witness():
    with pytest.raises(NoWitness):
        max_interval(3, 4, 1)


def test_certificate_fields_satisfy_defining_inequalities():
    for d in range(2, 90):
        for k, l in [(2, 1), (5, 2), (7, 4), (9, 2)]:
            if (k - l) % d == 0:
                continue
            interval, cert = max_interval(d, k, l)
            m = interval.length
            delta = math.gcd(d, k - l)
            assert cert.delta == delta
            assert ceil_div(l * (m - 1) + 1, delta) <= cert.c
            assert cert.c * delta <= d - k * (m - 1) - 1
            assert ((k - l) // delta) * cert.a - (d // delta) * cert.b == cert.c
            assert 0 <= cert.a < d // delta
            assert m == max_interval_size(d, k, l).size
            assert is_kl_sumfree(interval.to_set(), k, l)
            assert cert.verify()


def test_witness_examples():
    assert list(max_witness_cyclic(9, 5, 2)) == [1, 2]
    assert list(max_witness_cyclic(10, 2, 1)) == [1, 3, 5, 7, 9]
    with pytest.raises(NoWitness):
        max_witness_cyclic(12, 13, 1)


def test_witness_with_certificate_ties_together():
    witness, report, cert = witness_with_certificate(30, 3, 2)
    assert len(witness) == report.mu == mu_cyclic(30, 3, 2).mu
    assert is_kl_sumfree(witness, 3, 2)
    assert cert.d == report.best_divisor
    assert cert.verify()


def test_middle_set_examples():
    assert list(middle_set(7, 4)) == [2, 3, 4, 5]
    assert list(middle_set(7, 7)) == [0, 1, 2, 3, 4, 5, 6]
    assert list(middle_set(5, 1)) == [2]
    with pytest.raises(OutOfRange):
        middle_set(7, 8)
    with pytest.raises(OutOfRange):
        middle_set(7, 0)
    with pytest.raises(ValueError):
        middle_set(9, 2)


def test_middle_set_is_centered():
    for p in (5, 7, 11, 13):
        for m in range(1, p + 1):
            a = middle_set(p, m)
            assert len(a) == m
            assert min(a) == (p - m + 1) // 2


def test_two_short_fixture_examples():
    assert list(two_short_of_ap(13)) == [4, 6, 7, 9]
    assert list(two_short_of_ap(10)) == [3, 5, 7]
    with pytest.raises(OutOfRange):
        two_short_of_ap(12)
    with pytest.raises(OutOfRange):
        two_short_of_ap(7)


def test_two_short_fixture_shape():
    for n in (10, 13, 16, 19, 22, 25, 28):
        a = two_short_of_ap(n)
        assert len(a) == (n - 1) // 3
        assert is_kl_sumfree(a, 2, 1)
        assert (n - 1) // 3 in a
        assert (2 * n + 1) // 3 % n in a
