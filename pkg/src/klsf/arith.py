"""Small exact integer helpers used throughout the package.

Everything here is deterministic and pure: divisor lists by trial division,
ceiling division on nonnegative operands, modular inverses, and a trial
division primality test.  All remainders are normalized to [0, modulus).
"""

from __future__ import annotations

import math

from .errors import NonInvertible


def divisors(n: int) -> list[int]:
    """Return all positive divisors of n in ascending order.

    Trial division up to sqrt(n); intended for moderate n (say up to 10**12),
    not for cryptographic sizes.
    """
    if n < 1:
        raise ValueError(f"divisors requires a positive integer, got {n}")
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b for a >= 0, b >= 1."""
    if b < 1:
        raise ValueError(f"ceil_div requires b >= 1, got {b}")
    if a < 0:
        raise ValueError(f"ceil_div requires a >= 0, got {a}")
    return -(-a // b)


def mod_inverse(x: int, m: int) -> int:
    """Return the inverse of x modulo m, normalized to [0, m).

    Raises NonInvertible when gcd(x, m) > 1.
    """
    if m < 1:
        raise ValueError(f"mod_inverse requires m >= 1, got {m}")
    if math.gcd(x, m) != 1:
        raise NonInvertible(f"{x} has no inverse modulo {m} (gcd {math.gcd(x, m)})")
    return pow(x, -1, m)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True
