"""Exception types shared across the package.

Each class marks a distinct failure mode that callers may want to catch
separately; the CLI maps them onto process exit codes.
"""


class KlsfError(Exception):
    """Base class for all package-specific errors."""


class NonInvertible(KlsfError):
    """Requested a modular inverse of an element with gcd(x, m) > 1."""


class NotADivisor(KlsfError):
    """A quotient operation was asked to relate moduli d and n with d not dividing n."""


class ModulusMismatch(KlsfError):
    """Two residue sets from different ambient groups were combined."""


class NotSumFree(KlsfError):
    """An operation requiring a (k,l)-sum-free input received one that is not."""


class NoWitness(KlsfError):
    """No witness set exists for the requested instance (the maximum is zero)."""


class OutOfRange(KlsfError):
    """An argument lies outside the domain where the requested quantity is defined."""


class InstanceTooLarge(KlsfError):
    """A brute-force oracle was asked to exceed its hard size cap."""
