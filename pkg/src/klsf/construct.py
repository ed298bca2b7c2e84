"""Constructors for extremal (k,l)-sum-free sets, with checkable certificates.

The interval construction solves a congruence instead of searching.  An
interval A = [a, a+m-1] in Z_d has kA - lA equal to the integer interval
[(k-l)a - l(m-1), (k-l)a + k(m-1)], so A is sum-free exactly when that
interval fits strictly between two consecutive multiples of d.  Dividing
through by delta = gcd(d, k-l), the start a works if and only if

    ((k-l)/delta) * a - (d/delta) * b = C

for some integer b and some integer C with

    ceil((l(m-1)+1)/delta)  <=  C  <=  (d - k(m-1) - 1) / delta.

Since (k-l)/delta is invertible modulo d/delta, each admissible C yields a
start a by one modular inverse.  The certificate records (C, a, b, delta);
checking it needs only the range test, the linear identity, and one sumset
evaluation of the resulting interval.

Every constructor verifies its own output through the sumset engine before
returning, so a formula bug cannot silently produce a bad witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import ceil_div, is_prime, mod_inverse
from .errors import NoWitness, OutOfRange
from .formulas import max_interval_size, min_additive_pairs, mu_cyclic, MuReport
from .groups import Interval, ResidueSet, check_pair
from .sumsets import count_additive_tuples, is_kl_sumfree

# Counting self-checks are O(p^2); skip them above this modulus.
_COUNT_CHECK_CAP = 4096


@dataclass(frozen=True)
class ConstructionCertificate:
    """Witness data proving an interval of length m is (k,l)-sum-free in Z_d.

    c is the chosen integer in the admissible range (the smallest one, for
    determinism), a the interval start reduced to [0, d/delta), and b the
    cofactor in the linear identity ((k-l)/delta)*a - (d/delta)*b = c.
    """

    d: int
    k: int
    l: int
    m: int
    delta: int
    c: int
    a: int
    b: int

    def as_dict(self) -> dict:
        return {"C": self.c, "a": self.a, "b": self.b, "delta": self.delta}

    def verify(self) -> bool:
        """Re-check the certificate from scratch, including the sumset test."""
        d, k, l, m = self.d, self.k, self.l, self.m
        delta = math.gcd(d, k - l)
        if delta != self.delta or m < 1:
            return False
        low = ceil_div(l * (m - 1) + 1, delta)
        high = (d - k * (m - 1) - 1) // delta
        if not low <= self.c <= high:
            return False
        if not 0 <= self.a < d // delta:
            return False
        if ((k - l) // delta) * self.a - (d // delta) * self.b != self.c:
            return False
        interval = Interval(d, self.a, m)
        return is_kl_sumfree(interval.to_set(), k, l)


def max_interval(d: int, k: int, l: int) -> tuple[Interval, ConstructionCertificate]:
    """Construct a maximum-size (k,l)-sum-free interval in Z_d.

    Raises NoWitness when d divides k-l, in which case no nonempty sum-free
    set exists at all.
    """
    check_pair(k, l)
    if d < 1:
        raise ValueError(f"modulus must be positive, got {d}")
    if (k - l) % d == 0:
        raise NoWitness(f"Z_{d} has no nonempty ({k},{l})-sum-free set")
    m = max_interval_size(d, k, l).size
    delta = math.gcd(d, k - l)
    c = ceil_div(l * (m - 1) + 1, delta)
    high = (d - k * (m - 1) - 1) // delta
    if c > high:
        raise RuntimeError(
            f"admissible range for C is empty at d={d}, k={k}, l={l}, m={m}"
        )
    q = d // delta
    a = c * mod_inverse((k - l) // delta, q) % q
    b = (((k - l) // delta) * a - c) // q
    certificate = ConstructionCertificate(d, k, l, m, delta, c, a, b)
    interval = Interval(d, a, m)
    if not is_kl_sumfree(interval.to_set(), k, l):
        raise RuntimeError(
            f"constructed interval failed verification at d={d}, k={k}, l={l}"
        )
    return interval, certificate


def witness_with_certificate(
    n: int, k: int, l: int
) -> tuple[ResidueSet, MuReport, ConstructionCertificate]:
    """Build a maximum (k,l)-sum-free subset of Z_n with its audit trail.

    The witness is the preimage, under reduction modulo the best divisor d,
    of a maximum sum-free interval of Z_d.  Returns (witness, report,
    certificate); raises NoWitness when mu(Z_n) = 0, i.e. when n | k-l.
    """
    report = mu_cyclic(n, k, l)
    if report.mu == 0:
        raise NoWitness(f"mu(Z_{n}, {{{k},{l}}}) = 0; only the empty set is sum-free")
    interval, certificate = max_interval(report.best_divisor, k, l)
    witness = interval.to_set().lift_to(n)
    if len(witness) != report.mu or not is_kl_sumfree(witness, k, l):
        raise RuntimeError(
            f"lifted witness failed verification at n={n}, k={k}, l={l}"
        )
    return witness, report, certificate


def max_witness_cyclic(n: int, k: int, l: int) -> ResidueSet:
    """A maximum (k,l)-sum-free subset of Z_n (NoWitness when none exists)."""
    witness, _, _ = witness_with_certificate(n, k, l)
    return witness


def middle_set(p: int, m: int) -> ResidueSet:
    """The centered interval of m residues in Z_p, starting at ceil((p-m)/2).

    For prime p this is the canonical minimizer of additive pair counts;
    while m stays within the sum-free range it is simply a maximum-size
    sum-free interval.  The pair count is re-checked against the closed
    form for small moduli.
    """
    if not is_prime(p):
        raise ValueError(f"expected a prime modulus, got {p}")
    if m < 1 or m > p:
        raise OutOfRange(f"subset size {m} outside 1..{p}")
    a = ceil_div(p - m, 2)
    result = Interval(p, a, m).to_set()
    if len(result) != m:
        raise RuntimeError(f"middle set construction lost members at p={p}, m={m}")
    if p <= _COUNT_CHECK_CAP:
        expected = min_additive_pairs(p, m)
        actual = count_additive_tuples(result, 2)
        if actual != expected:
            raise RuntimeError(
                f"middle set pair count {actual} != {expected} at p={p}, m={m}"
            )
    return result


def two_short_of_ap(n: int) -> ResidueSet:
    """A (2,1)-sum-free subset of Z_n that is two members short of a progression.

    Defined for n >= 10 with n = 1 mod 3 as
    {(n-1)/3} u [(n+5)/3, (2n-5)/3] u {(2n+1)/3}, of size (n-1)/3.  The two
    endpoints sit one step away from the middle run, so the set is not an
    arithmetic progression, yet it is still sum-free; it witnesses that
    progressions do not exhaust the extremal examples for pair (2,1).
    """
    if n < 10 or n % 3 != 1:
        raise OutOfRange(f"construction needs n >= 10 with n = 1 mod 3, got {n}")
    lo = (n + 5) // 3
    hi = (2 * n - 5) // 3
    members = [(n - 1) // 3, *range(lo, hi + 1), (2 * n + 1) // 3]
    result = ResidueSet.from_elements(n, members)
    if len(result) != (n - 1) // 3 or not is_kl_sumfree(result, 2, 1):
        raise RuntimeError(f"two-short construction failed verification at n={n}")
    return result
