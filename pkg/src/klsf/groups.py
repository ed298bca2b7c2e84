"""Data model for subsets of finite cyclic groups and small abelian groups.

A subset of Z_n is stored as a characteristic bitmask in a single Python
integer: bit i is set exactly when residue i belongs to the set.  Python
integers are arbitrary precision, so one value covers the whole group and
the sumset kernels in the engine module become shift/or word operations.
The modulus is capped at 2**20 to keep masks at a sane size.

Structured subsets (intervals and arithmetic progressions) carry their
parameters and expand to ResidueSet on demand.  Arithmetic progressions
follow two conventions used throughout: the length m must satisfy
m <= n / gcd(step, n) so all m elements are distinct, and a singleton is
always recorded with step 1, which places one-element progressions in the
coprime-step class.

Finite abelian groups appear only through their invariant-factor form
d_1 | d_2 | ... | d_s; the empty list is the trivial group.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import ModulusMismatch, NotADivisor

MAX_MODULUS = 1 << 20


def _check_modulus(n: int) -> None:
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n > MAX_MODULUS:
        raise ValueError(f"modulus {n} exceeds the supported cap {MAX_MODULUS}")


@dataclass(frozen=True)
class SumPair:
    """A coefficient pair (k, l) with k > l >= 1.

    Sum-freeness of a set A means the k-fold and l-fold sumsets of A are
    disjoint; the constraint k > l >= 1 fixes the asymmetric normal form.
    """

    k: int
    l: int

    def __post_init__(self) -> None:
        check_pair(self.k, self.l)


def check_pair(k: int, l: int) -> None:
    """Validate a coefficient pair; raises ValueError unless k > l >= 1."""
    if not (isinstance(k, int) and isinstance(l, int)):
        raise ValueError(f"coefficients must be integers, got ({k!r}, {l!r})")
    if not k > l >= 1:
        raise ValueError(f"coefficient pair requires k > l >= 1, got k={k}, l={l}")


@dataclass(frozen=True)
class ResidueSet:
    """An immutable subset of Z_n held as a characteristic bitmask.

    Parameters
    ----------
    modulus : int
        The ambient group order n, 1 <= n <= 2**20.
    mask : int
        Characteristic bitmask; bit i set means residue i is a member.
    """

    modulus: int
    mask: int

    def __post_init__(self) -> None:
        _check_modulus(self.modulus)
        if self.mask < 0 or self.mask.bit_length() > self.modulus:
            raise ValueError(
                f"mask 0x{self.mask:x} does not fit in Z_{self.modulus}"
            )

    @classmethod
    def from_elements(cls, modulus: int, elements) -> "ResidueSet":
        """Build a set from an iterable of residues in [0, modulus)."""
        _check_modulus(modulus)
        mask = 0
        for x in elements:
            if not 0 <= x < modulus:
                raise ValueError(f"residue {x} out of range for Z_{modulus}")
            mask |= 1 << x
        return cls(modulus, mask)

    @classmethod
    def empty(cls, modulus: int) -> "ResidueSet":
        return cls(modulus, 0)

    @classmethod
    def full(cls, modulus: int) -> "ResidueSet":
        _check_modulus(modulus)
        return cls(modulus, (1 << modulus) - 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self):
        """Yield members in ascending order."""
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.modulus and (self.mask >> x) & 1 == 1

    def __repr__(self) -> str:
        return f"ResidueSet({self.modulus}, {{{', '.join(map(str, self))}}})"

    def _require_same_modulus(self, other: "ResidueSet") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"moduli differ: {self.modulus} vs {other.modulus}"
            )

    def union(self, other: "ResidueSet") -> "ResidueSet":
        self._require_same_modulus(other)
        return ResidueSet(self.modulus, self.mask | other.mask)

    def intersection(self, other: "ResidueSet") -> "ResidueSet":
        self._require_same_modulus(other)
        return ResidueSet(self.modulus, self.mask & other.mask)

    def complement(self) -> "ResidueSet":
        return ResidueSet(self.modulus, self.mask ^ ((1 << self.modulus) - 1))

    def is_empty(self) -> bool:
        return self.mask == 0

    def dilate(self, u: int) -> "ResidueSet":
        """Return u*A = {u*x mod n : x in A}.

        Dilation by a unit is a bijection; by a non-unit it may collapse
        members onto each other.
        """
        n = self.modulus
        out = 0
        for x in self:
            out |= 1 << (u * x % n)
        return ResidueSet(n, out)

    def lift_to(self, n: int) -> "ResidueSet":
        """Return the full preimage of A under the quotient map Z_n -> Z_d.

        The result is {x in Z_n : x mod d in A}, of size |A| * n/d.  Raises
        NotADivisor unless d divides n.
        """
        d = self.modulus
        if n < 1 or n % d != 0:
            raise NotADivisor(f"{d} does not divide {n}")
        _check_modulus(n)
        out = 0
        for j in range(n // d):
            out |= self.mask << (j * d)
        return ResidueSet(n, out)


@dataclass(frozen=True)
class Interval:
    """The interval {start, start+1, ..., start+length-1} reduced mod modulus.

    length may be 0 (the empty interval) and at most modulus.
    """

    modulus: int
    start: int
    length: int

    def __post_init__(self) -> None:
        _check_modulus(self.modulus)
        if not 0 <= self.start < self.modulus:
            raise ValueError(f"start {self.start} out of range for Z_{self.modulus}")
        if not 0 <= self.length <= self.modulus:
            raise ValueError(
                f"interval length {self.length} out of range for Z_{self.modulus}"
            )

    def to_set(self) -> ResidueSet:
        n, a, m = self.modulus, self.start, self.length
        if m == 0:
            return ResidueSet.empty(n)
        full = (1 << n) - 1
        block = (1 << m) - 1
        mask = ((block << a) | (block >> (n - a))) & full
        return ResidueSet(n, mask)


@dataclass(frozen=True)
class ArithmeticProgression:
    """The progression {start + i*step mod modulus : 0 <= i < length}.

    length is positive and bounded by modulus / gcd(step, modulus) so that
    all members are distinct.  A singleton is normalized to step 1.
    """

    modulus: int
    start: int
    step: int
    length: int

    def __post_init__(self) -> None:
        _check_modulus(self.modulus)
        if not 0 <= self.start < self.modulus:
            raise ValueError(f"start {self.start} out of range for Z_{self.modulus}")
        if not 0 <= self.step < self.modulus:
            raise ValueError(f"step {self.step} out of range for Z_{self.modulus}")
        if self.length < 1:
            raise ValueError(f"progression length must be positive, got {self.length}")
        if self.length == 1:
            object.__setattr__(self, "step", 1 % self.modulus)
        else:
            g = math.gcd(self.step, self.modulus)
            if self.length > self.modulus // g:
                raise ValueError(
                    f"length {self.length} exceeds {self.modulus}//gcd"
                    f"({self.step},{self.modulus}) = {self.modulus // g}"
                )

    def to_set(self) -> ResidueSet:
        n = self.modulus
        mask = 0
        x = self.start
        for _ in range(self.length):
            mask |= 1 << x
            x = (x + self.step) % n
        return ResidueSet(n, mask)


def ap_to_set(p: ArithmeticProgression) -> ResidueSet:
    """Expand an arithmetic progression to its ResidueSet."""
    return p.to_set()


def lift_through_quotient(a: ResidueSet, n: int) -> ResidueSet:
    """Preimage of a subset of Z_d under the reduction map Z_n -> Z_d."""
    return a.lift_to(n)


def dilate(a: ResidueSet, u: int) -> ResidueSet:
    """Return the dilation u*A."""
    return a.dilate(u)


def is_arithmetic_progression(a: ResidueSet) -> bool:
    """Decide whether a set equals some arithmetic progression in its group.

    Empty sets and singletons count as progressions.  The test tries every
    step; cost is O(n * |A|), fine for the small groups where it is used.
    """
    n = a.modulus
    m = len(a)
    if m <= 1:
        return True
    target = a.mask
    members = list(a)
    for b in range(1, n):
        if m > n // math.gcd(b, n):
            continue
        for start in members:
            mask = 0
            x = start
            for _ in range(m):
                mask |= 1 << x
                x = (x + b) % n
            if mask == target:
                return True
    return False


def format_set_literal(a: ResidueSet) -> str:
    """Render a set as a sorted bracketed list, e.g. '[1,2]'."""
    return "[" + ",".join(map(str, a)) + "]"


def parse_set_literal(text: str, modulus: int) -> ResidueSet:
    """Parse a bracketed residue list such as '[1, 2]' into a ResidueSet.

    Whitespace is insignificant.  Raises ValueError on malformed input or
    residues outside [0, modulus).
    """
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"set literal must be bracketed, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ResidueSet.empty(modulus)
    try:
        elements = [int(tok.strip()) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"set literal contains a non-integer entry: {text!r}") from None
    return ResidueSet.from_elements(modulus, elements)


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group in invariant-factor form.

    invariant_factors is a chain d_1 | d_2 | ... | d_s with every d_i >= 2;
    the empty chain is the trivial group of order 1 and exponent 1.
    """

    invariant_factors: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        factors = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for d in factors:
            if d < 2:
                raise ValueError(f"invariant factors must be >= 2, got {d}")
        for a, b in zip(factors, factors[1:]):
            if b % a != 0:
                raise ValueError(
                    f"invariant factors must form a divisibility chain, got {factors}"
                )

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def elements(self) -> list[tuple[int, ...]]:
        """All group elements as coordinate tuples, in lexicographic order.

        The identity is first, so element index 0 is always the identity.
        """
        return list(itertools.product(*(range(d) for d in self.invariant_factors)))

    def __repr__(self) -> str:
        if not self.invariant_factors:
            return "AbelianGroup(trivial)"
        return "AbelianGroup(" + " x ".join(f"Z_{d}" for d in self.invariant_factors) + ")"


def _partitions(e: int, cap: int | None = None):
    """Yield the partitions of e as descending tuples."""
    if e == 0:
        yield ()
        return
    first = min(e, cap) if cap is not None else e
    for head in range(first, 0, -1):
        for rest in _partitions(e - head, head):
            yield (head,) + rest


def abelian_groups_of_order(n: int) -> list[AbelianGroup]:
    """Enumerate every abelian group of order n up to isomorphism.

    Factor n, pick a partition of each prime exponent, and assemble the
    invariant-factor chain by multiplying the i-th largest prime powers
    across primes.
    """
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    if n == 1:
        return [AbelianGroup(())]
    prime_exponents: dict[int, int] = {}
    rest = n
    p = 2
    while p * p <= rest:
        while rest % p == 0:
            prime_exponents[p] = prime_exponents.get(p, 0) + 1
            rest //= p
        p += 1
    if rest > 1:
        prime_exponents[rest] = prime_exponents.get(rest, 0) + 1

    primes = sorted(prime_exponents)
    choices = [list(_partitions(prime_exponents[p])) for p in primes]
    groups = []
    for combo in itertools.product(*choices):
        width = max(len(part) for part in combo)
        chain = []
        for i in range(width):
            factor = 1
            for p, part in zip(primes, combo):
                if i < len(part):
                    factor *= p ** part[i]
            chain.append(factor)
        # chain is descending with chain[i+1] | chain[i]; flip to ascending
        groups.append(AbelianGroup(tuple(reversed(chain))))
    groups.sort(key=lambda g: g.invariant_factors)
    return groups
