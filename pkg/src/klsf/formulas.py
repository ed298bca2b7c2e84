"""Closed-form maximum sizes of (k,l)-sum-free sets in finite cyclic groups.

A set A in Z_n is (k,l)-sum-free when the k-fold and l-fold sumsets are
disjoint.  Write delta = gcd(d, k-l) for a divisor d of n.  The size of a
largest sum-free interval (equivalently, coprime-step progression) in Z_d is

    size(d) = ceil((d - (delta - r)) / (k+l)),

where the correction r is obtained in two steps: the first-order guess
f = ceil((d - delta) / (k+l)) and r = (l * f) mod delta.  The guess is
never more than one below the truth, so size(d) is f or f + 1.

The cyclic maximum arises by lifting an extremal interval from the best
divisor quotient:

    mu(Z_n) = max over d | n of size(d) * n / d.

Two cheaper bounds sandwich it, replacing delta - r by delta (lower) or by
1 (upper).  Classical special cases are recovered exactly: for prime p the
maximum is 0 when p | k-l and ceil((p-1)/(k+l)) otherwise, and when
gcd(n, k-l) = 1 the upper bound is attained.

For a general finite abelian group G of order N and exponent e, lifting
through a quotient onto a cyclic factor gives the lower bound
max over d | e of size(d) * N / d.  The bound is known to be exact when
some divisor d of e is not congruent to any of 1..gcd(d, k-l) modulo k+l
(and trivially when e | k-l, where both sides vanish); in general exactness
is an open conjecture, so the evaluation reports a flag rather than
asserting equality.

Finally, below the sum-free threshold every m-subset of Z_p must close on
itself somewhere: for prime p and pairs (k=2), the minimum number of
ordered pairs from an m-subset whose sum lies back in the subset is
floor((3m - p)^2 / 4) once m exceeds the sum-free maximum, and the unique
minimizers are unit dilations of the centered interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import ceil_div, divisors, is_prime
from .errors import OutOfRange
from .groups import AbelianGroup, check_pair


@dataclass(frozen=True)
class IntervalCapacity:
    """Largest sum-free interval size in Z_d, with its computation trace.

    delta = gcd(d, k-l); base is the first-order guess, remainder the
    correction term; size is the final value.  base <= size <= base + 1
    always holds, and size = 0 exactly when d divides k-l.
    """

    d: int
    k: int
    l: int
    delta: int
    base: int
    remainder: int
    size: int


@dataclass(frozen=True)
class DivisorRow:
    """One divisor's contribution to the cyclic maximum."""

    d: int
    delta: int
    remainder: int
    interval_max: int
    contribution: int


@dataclass(frozen=True)
class MuReport:
    """Full evaluation of the cyclic maximum mu(Z_n, {k,l}).

    best_divisor is the smallest divisor attaining the maximum, which makes
    reports deterministic.  lower_bound and upper_bound are the sandwich
    values; rows list every divisor's contribution.
    """

    n: int
    k: int
    l: int
    mu: int
    best_divisor: int
    lower_bound: int
    upper_bound: int
    rows: tuple[DivisorRow, ...]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "mu": self.mu,
            "best_divisor": self.best_divisor,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "divisors": [
                {
                    "d": row.d,
                    "delta": row.delta,
                    "remainder": row.remainder,
                    "interval_max": row.interval_max,
                    "contribution": row.contribution,
                }
                for row in self.rows
            ],
        }


def interval_feasible(d: int, k: int, l: int, m: int) -> bool:
    """Does Z_d contain a (k,l)-sum-free interval of m distinct residues?

    The criterion is k(m-1) + ceil((l(m-1)+1)/delta) * delta < d with
    delta = gcd(d, k-l).  m = 0 is feasible by convention (the empty set).
    """
    check_pair(k, l)
    if d < 1:
        raise ValueError(f"modulus must be positive, got {d}")
    if m < 0:
        raise ValueError(f"interval size must be nonnegative, got {m}")
    if m == 0:
        return True
    delta = math.gcd(d, k - l)
    return k * (m - 1) + ceil_div(l * (m - 1) + 1, delta) * delta < d


def max_interval_size(d: int, k: int, l: int) -> IntervalCapacity:
    """Exact largest size of a (k,l)-sum-free interval in Z_d."""
    check_pair(k, l)
    if d < 1:
        raise ValueError(f"modulus must be positive, got {d}")
    delta = math.gcd(d, k - l)
    base = ceil_div(d - delta, k + l)
    remainder = (l * base) % delta
    size = ceil_div(d - (delta - remainder), k + l)
    return IntervalCapacity(d, k, l, delta, base, remainder, size)


def mu_cyclic(n: int, k: int, l: int) -> MuReport:
    """Evaluate mu(Z_n, {k,l}) with its per-divisor breakdown."""
    check_pair(k, l)
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    rows = []
    mu = 0
    best = None
    for d in divisors(n):
        cap = max_interval_size(d, k, l)
        contribution = cap.size * (n // d)
        rows.append(DivisorRow(d, cap.delta, cap.remainder, cap.size, contribution))
        if contribution > mu:
            mu = contribution
            best = d
    if best is None:
        best = 1  # all contributions are zero; report the smallest divisor
    lower, upper = mu_bounds(n, k, l)
    return MuReport(n, k, l, mu, best, lower, upper, tuple(rows))


def mu_bounds(n: int, k: int, l: int) -> tuple[int, int]:
    """Sandwich bounds for mu(Z_n, {k,l}), evaluated from their own expressions.

    lower = max over d | n of ceil((d - gcd(d,k-l)) / (k+l)) * n/d
    upper = max over d | n of ceil((d - 1) / (k+l)) * n/d
    """
    check_pair(k, l)
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    lower = 0
    upper = 0
    for d in divisors(n):
        q = n // d
        lower = max(lower, ceil_div(d - math.gcd(d, k - l), k + l) * q)
        upper = max(upper, ceil_div(d - 1, k + l) * q)
    return lower, upper


def mu_prime(p: int, k: int, l: int) -> int:
    """mu(Z_p, {k,l}) for prime p: 0 if p | k-l, else ceil((p-1)/(k+l))."""
    check_pair(k, l)
    if not is_prime(p):
        raise ValueError(f"expected a prime modulus, got {p}")
    if (k - l) % p == 0:
        return 0
    return ceil_div(p - 1, k + l)


def mu_abelian_lower(G: AbelianGroup, k: int, l: int) -> tuple[int, bool]:
    """Quotient-lifting lower bound for mu(G, {k,l}), with an exactness flag.

    Returns (bound, exactness_known).  The bound lifts the best cyclic
    interval through a quotient onto Z_d for each divisor d of the exponent.
    exactness_known is True when the bound provably equals mu(G): either
    some divisor d of the exponent avoids all residues 1..gcd(d,k-l) modulo
    k+l, or the exponent divides k-l and both sides are zero.  Otherwise
    equality is conjectural and the flag is False.
    """
    check_pair(k, l)
    n = G.order
    e = G.exponent
    bound = 0
    for d in divisors(e):
        bound = max(bound, max_interval_size(d, k, l).size * (n // d))

    if (k - l) % e == 0:
        return bound, True
    s = k + l
    for d in divisors(e):
        rem = d % s
        if rem == 0 or rem > math.gcd(d, k - l):
            return bound, True
    return bound, False


def min_additive_pairs(p: int, m: int) -> int:
    """Minimum count of ordered pairs from an m-subset of Z_p summing into it.

    Zero exactly while a (2,1)-sum-free m-subset exists, i.e. for
    m <= ceil((p-1)/3); beyond that the minimum is floor((3m-p)^2 / 4).
    Raises OutOfRange unless 1 <= m <= p; p must be prime.
    """
    if not is_prime(p):
        raise ValueError(f"expected a prime modulus, got {p}")
    if m < 1 or m > p:
        raise OutOfRange(f"subset size {m} outside 1..{p}")
    if m <= mu_prime(p, 2, 1):
        return 0
    return (3 * m - p) ** 2 // 4
