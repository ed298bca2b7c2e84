"""Exact sumset computation over Z_n bitmasks, plus a small group-table fallback.

The pairwise kernel computes A + B = union over a in A of (B rotated by a).
With sets stored as integer bitmasks a rotation is two shifts and a mask, so
the amortized cost is one word operation per (member, word) pair.  h-fold
sumsets use binary doubling through the identity (h1 + h2)A = h1A + h2A:
every element of (h1+h2)A splits into a sum of h1 members plus a sum of h2
members, and conversely.

Counting of additive tuples is exact integer arithmetic: the k-fold cyclic
convolution of the indicator vector counts representations, and the answer
is the sum of the convolution over the set itself.  No floating-point
transforms are involved; a bound check guards against int64 overflow.

For noncyclic groups a dense addition-table fallback (GroupTable) mirrors
the same operations for orders up to 64; translation by a fixed element is
a table-driven permutation of mask bits instead of a rotation.
"""

from __future__ import annotations

import numpy as np

from .errors import InstanceTooLarge, ModulusMismatch, NotSumFree
from .groups import AbelianGroup, ResidueSet, check_pair

MAX_TABLE_ORDER = 64


# ---------------------------------------------------------------------------
# raw-mask kernels (moduli and masks as plain ints; no validation here)

def _pairwise_mask(a: int, b: int, n: int, full: int) -> int:
    """Bitmask of A + B in Z_n; rotates the larger operand by members of the smaller."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        s = low.bit_length() - 1
        out |= (b << s) | (b >> (n - s))
        a ^= low
    return out & full


def _h_fold_mask(mask: int, h: int, n: int, full: int) -> int:
    """Bitmask of hA via binary doubling; empty input stays empty."""
    if mask == 0:
        return 0
    result = None
    base = mask
    while h:
        if h & 1:
            result = base if result is None else _pairwise_mask(result, base, n, full)
        h >>= 1
        if h:
            base = _pairwise_mask(base, base, n, full)
    return result


def add_element_sumsets(sums: list[int], x: int, n: int) -> list[int]:
    """Update a ladder of h-fold sumset masks when one element joins the set.

    sums[h] must be the bitmask of hA for h = 0..K, with sums[0] = {0} (mask 1).
    Returns the ladder for A union {x}.  The update law is

        h(A u {x}) = hA  union  ((h-1)(A u {x}) + x)

    because a sum using x at least once splits off one copy of x.
    """
    full = (1 << n) - 1
    nx = n - x
    out = [1]
    prev = 1
    for h in range(1, len(sums)):
        prev = (sums[h] | (((prev << x) | (prev >> nx)) & full)) if x else (sums[h] | prev)
        out.append(prev)
    return out


# ---------------------------------------------------------------------------
# public API on ResidueSet

def pairwise_sumset(a: ResidueSet, b: ResidueSet) -> ResidueSet:
    """Return A + B = {x + y mod n : x in A, y in B}."""
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"moduli differ: {a.modulus} vs {b.modulus}")
    n = a.modulus
    return ResidueSet(n, _pairwise_mask(a.mask, b.mask, n, (1 << n) - 1))


def h_fold_sumset(a: ResidueSet, h: int) -> ResidueSet:
    """Return hA, the set of sums of exactly h members (with repetition)."""
    if h < 1:
        raise ValueError(f"h-fold sumset requires h >= 1, got {h}")
    n = a.modulus
    return ResidueSet(n, _h_fold_mask(a.mask, h, n, (1 << n) - 1))


def is_kl_sumfree(a: ResidueSet, k: int, l: int) -> bool:
    """Decide whether kA and lA are disjoint."""
    check_pair(k, l)
    n = a.modulus
    full = (1 << n) - 1
    if a.mask == 0:
        return True
    k_mask = _h_fold_mask(a.mask, k, n, full)
    if k_mask == full:
        # lA is nonempty, so it must meet kA
        return False
    l_mask = _h_fold_mask(a.mask, l, n, full)
    return k_mask & l_mask == 0


def is_complete(a: ResidueSet, k: int, l: int) -> bool:
    """Given a (k,l)-sum-free set, decide whether kA and lA partition Z_n.

    Raises NotSumFree when the disjointness precondition fails.
    """
    check_pair(k, l)
    n = a.modulus
    full = (1 << n) - 1
    k_mask = _h_fold_mask(a.mask, k, n, full) if a.mask else 0
    l_mask = _h_fold_mask(a.mask, l, n, full) if a.mask else 0
    if k_mask & l_mask:
        witness = (k_mask & l_mask).bit_length() - 1
        raise NotSumFree(f"kA and lA intersect, e.g. at {witness}")
    return (k_mask | l_mask) == full


def count_additive_tuples(a: ResidueSet, k: int) -> int:
    """Count tuples (a_1, ..., a_k) in A^k whose sum falls back in A.

    Computed as the sum over A of the k-fold cyclic convolution of the
    indicator vector of A, all in exact int64 arithmetic.
    """
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    n = a.modulus
    m = len(a)
    if m == 0:
        return 0
    if m ** k >= 2 ** 62:
        raise OverflowError(
            f"counts up to {m}**{k} may not fit in int64; instance too large"
        )
    members = list(a)
    f = np.zeros(n, dtype=np.int64)
    f[members] = 1
    g = f
    for _ in range(k - 1):
        conv = np.convolve(g, f)
        folded = conv[:n].copy()
        if n > 1:
            folded[: n - 1] += conv[n:]
        g = folded
    return int(g[members].sum())


# ---------------------------------------------------------------------------
# dense fallback for small noncyclic groups

class GroupTable:
    """Addition-table view of a finite abelian group of order at most 64.

    Elements are indexed 0..n-1 in lexicographic coordinate order, so index
    0 is the identity.  Subsets are bitmasks over element indices, and all
    sumset operations go through the precomputed table, which keeps them
    honest for groups where rotation tricks do not apply.
    """

    def __init__(self, group: AbelianGroup):
        n = group.order
        if n > MAX_TABLE_ORDER:
            raise InstanceTooLarge(
                f"group order {n} exceeds the table fallback cap {MAX_TABLE_ORDER}"
            )
        self.group = group
        self.order = n
        elements = group.elements()
        index = {e: i for i, e in enumerate(elements)}
        factors = group.invariant_factors
        self.add: list[list[int]] = []
        for x in elements:
            row = [
                index[tuple((xc + yc) % d for xc, yc, d in zip(x, y, factors))]
                for y in elements
            ]
            self.add.append(row)
        self.elements = elements
        self.full = (1 << n) - 1

    def translate(self, mask: int, x: int) -> int:
        """Image of a subset under addition of the fixed element x."""
        row = self.add[x]
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << row[low.bit_length() - 1]
            mask ^= low
        return out

    def pairwise_sumset(self, a: int, b: int) -> int:
        if a.bit_count() > b.bit_count():
            a, b = b, a
        out = 0
        while a:
            low = a & -a
            out |= self.translate(b, low.bit_length() - 1)
            a ^= low
        return out

    def h_fold_sumset(self, mask: int, h: int) -> int:
        if h < 1:
            raise ValueError(f"h-fold sumset requires h >= 1, got {h}")
        if mask == 0:
            return 0
        result = None
        base = mask
        while h:
            if h & 1:
                result = base if result is None else self.pairwise_sumset(result, base)
            h >>= 1
            if h:
                base = self.pairwise_sumset(base, base)
        return result

    def is_kl_sumfree(self, mask: int, k: int, l: int) -> bool:
        check_pair(k, l)
        if mask == 0:
            return True
        k_mask = self.h_fold_sumset(mask, k)
        if k_mask == self.full:
            return False
        return k_mask & self.h_fold_sumset(mask, l) == 0
