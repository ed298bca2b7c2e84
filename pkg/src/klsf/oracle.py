"""Independent brute-force ground truth for the closed-form results.

Nothing in this module consults the formulas: maxima come from exhaustive
branch-and-bound over subsets, progression scans test every candidate
through the sumset engine, and tuple minima enumerate subsets directly.
The searches exploit only two elementary facts, both of which the engine
test suite pins down separately:

  * a subset of a (k,l)-sum-free set is (k,l)-sum-free (so depth-first
    extension with pruning at the first violation is exhaustive), and
  * 0 never lies in a nonempty sum-free set (k*0 = l*0 = 0), so candidate
    elements start at 1.

The subset search keeps the whole ladder of h-fold sumsets 1A..kA as
bitmasks and updates it incrementally when an element joins; the bound
prune discards branches that cannot reach the incumbent even by taking
every remaining candidate.  A progression scan walks prefixes of each
(start, step) pair and stops at the first violation; steps b and d-b
generate identical set families ({a - jb} re-parameterizes {a' + j(d-b)}),
so only steps up to d/2 are scanned.

Hard caps keep every oracle within interactive reach; results carry node counts and
wall time so the acceptance suite can report its work honestly.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Literal, Optional

from .errors import InstanceTooLarge
from .groups import AbelianGroup, ResidueSet, check_pair, is_arithmetic_progression
from .sumsets import GroupTable, add_element_sumsets

MAX_SUBSET_SEARCH = 40
MAX_AP_SCAN = 400
MAX_CLASSIFY = 30
MAX_TUPLE_SCAN = 10 ** 6
WITNESS_CAP = 10 ** 5

StepClass = Literal["any", "coprime", "non_coprime"]


@dataclass
class OracleResult:
    """Outcome of one brute-force run.

    witnesses holds extremal sets (possibly truncated at the cap);
    witness_count is the exact total when the run enumerated everything,
    None when only one representative was requested.
    """

    instance: tuple
    optimum: int
    witnesses: list = field(default_factory=list)
    witness_count: Optional[int] = None
    nodes: int = 0
    elapsed: float = 0.0


def max_sumfree_bruteforce(
    n: int,
    k: int,
    l: int,
    *,
    enumerate_all: bool = False,
    prune: bool = True,
    cap: int | None = None,
    witness_cap: int = WITNESS_CAP,
) -> OracleResult:
    """Exhaustive maximum (k,l)-sum-free subset search over Z_n.

    With enumerate_all the result carries every maximum set (the empty set
    when the optimum is zero) and their exact count.  prune=False disables
    the bound prune for soundness cross-checks; the search is then a plain
    exhaustive walk of all sum-free subsets.
    """
    check_pair(k, l)
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    limit = MAX_SUBSET_SEARCH if cap is None else cap
    if n > limit:
        raise InstanceTooLarge(f"subset search capped at n <= {limit}, got {n}")
    t0 = time.perf_counter()

    nodes = 0
    best = 0
    best_masks = [0]
    count = 1
    base = [1] + [0] * k

    if not enumerate_all:
        # greedy incumbent: any maximal sum-free set gives a sound lower bound
        sums = base
        mask = 0
        size = 0
        for x in range(1, n):
            new = add_element_sumsets(sums, x, n)
            if new[k] & new[l]:
                continue
            sums, mask, size = new, mask | (1 << x), size + 1
        if size > 0:
            best, best_masks, count = size, [mask], 1

    def rec(start: int, size: int, sums: list[int], mask: int) -> None:
        nonlocal nodes, best, best_masks, count
        for x in range(start, n):
            if prune and size + (n - x) <= (best - 1 if enumerate_all else best):
                break
            nodes += 1
            new = add_element_sumsets(sums, x, n)
            if new[k] & new[l]:
                continue
            nsize = size + 1
            nmask = mask | (1 << x)
            if nsize > best:
                best, best_masks, count = nsize, [nmask], 1
            elif nsize == best and enumerate_all:
                count += 1
                if len(best_masks) < witness_cap:
                    best_masks.append(nmask)
            rec(x + 1, nsize, new, nmask)

    rec(1, 0, base, 0)
    witnesses = [ResidueSet(n, m) for m in sorted(best_masks)]
    return OracleResult(
        instance=(n, k, l),
        optimum=best,
        witnesses=witnesses,
        witness_count=count if enumerate_all else None,
        nodes=nodes,
        elapsed=time.perf_counter() - t0,
    )


def max_ap_bruteforce(
    d: int,
    k: int,
    l: int,
    step_class: StepClass = "any",
    *,
    cap: int | None = None,
) -> OracleResult:
    """Largest (k,l)-sum-free arithmetic progression in Z_d, by scan.

    step_class restricts the step b: "coprime" requires gcd(b,d) = 1,
    "non_coprime" requires gcd(b,d) > 1, "any" allows both.  Singletons
    are progressions of step 1 by convention, so they belong to the
    coprime class (and to "any") but never to "non_coprime"; an optimum
    of 0 means the class contains no sum-free progression at all.
    """
    check_pair(k, l)
    if d < 1:
        raise ValueError(f"modulus must be positive, got {d}")
    if step_class not in ("any", "coprime", "non_coprime"):
        raise ValueError(f"unknown step class {step_class!r}")
    limit = MAX_AP_SCAN if cap is None else cap
    if d > limit:
        raise InstanceTooLarge(f"progression scan capped at d <= {limit}, got {d}")
    t0 = time.perf_counter()

    full = (1 << d) - 1
    nodes = 0
    best = 0
    best_params: tuple[int, int, int] | None = None

    if step_class != "non_coprime":
        for a in range(d):
            nodes += 1
            ladder = add_element_sumsets([1] + [0] * k, a, d)
            if not ladder[k] & ladder[l]:
                best = 1
                best_params = (a, 1, 1)
                break

    half = d // 2
    for b in range(1, half + 1):
        g = math.gcd(b, d)
        if step_class == "coprime" and g != 1:
            continue
        if step_class == "non_coprime" and g == 1:
            continue
        mmax = d // g
        if mmax < 2:
            continue
        for a in range(d):
            sums = [1] + [0] * k
            x = a
            m = 0
            while m < mmax:
                nodes += 1
                # inline sumset-ladder update for A u {x}
                prev = 1
                if x:
                    nx = d - x
                    for h in range(1, k + 1):
                        prev = sums[h] | (((prev << x) | (prev >> nx)) & full)
                        sums[h] = prev
                else:
                    for h in range(1, k + 1):
                        prev |= sums[h]
                        sums[h] = prev
                if sums[k] & sums[l]:
                    break
                m += 1
                if m > best and m >= 2:
                    best = m
                    best_params = (a, b, m)
                x += b
                if x >= d:
                    x -= d

    witnesses = []
    if best_params is not None:
        a, b, m = best_params
        mask = 0
        x = a
        for _ in range(m):
            mask |= 1 << x
            x = (x + b) % d
        witnesses.append(ResidueSet(d, mask))
    return OracleResult(
        instance=(d, k, l, step_class),
        optimum=best,
        witnesses=witnesses,
        witness_count=None,
        nodes=nodes,
        elapsed=time.perf_counter() - t0,
    )


def min_additive_tuples_bruteforce(
    n: int,
    k: int,
    m: int,
    *,
    cap: int | None = None,
    witness_cap: int = WITNESS_CAP,
) -> OracleResult:
    """Minimum over all m-subsets of Z_n of the number of k-tuples summing back in.

    Exhaustive scan with direct nested-loop counting (k <= 3).  witnesses
    are all minimizing subsets, witness_count their exact number.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if not 1 <= m <= n:
        raise ValueError(f"subset size {m} outside 1..{n}")
    if not 1 <= k <= 3:
        raise InstanceTooLarge(f"tuple scan supports 1 <= k <= 3, got {k}")
    total = math.comb(n, m)
    limit = MAX_TUPLE_SCAN if cap is None else cap
    if total > limit:
        raise InstanceTooLarge(
            f"tuple scan capped at C(n,m) <= {limit}, got C({n},{m}) = {total}"
        )
    t0 = time.perf_counter()

    best: int | None = None
    minimizers: list[int] = []
    count = 0
    for subset in itertools.combinations(range(n), m):
        mask = 0
        for x in subset:
            mask |= 1 << x
        tuples = 0
        if k == 1:
            tuples = m
        elif k == 2:
            for x in subset:
                for y in subset:
                    if (mask >> ((x + y) % n)) & 1:
                        tuples += 1
        else:
            for x in subset:
                for y in subset:
                    xy = x + y
                    for z in subset:
                        if (mask >> ((xy + z) % n)) & 1:
                            tuples += 1
        if best is None or tuples < best:
            best = tuples
            minimizers = [mask]
            count = 1
        elif tuples == best:
            count += 1
            if len(minimizers) < witness_cap:
                minimizers.append(mask)

    witnesses = [ResidueSet(n, mask) for mask in minimizers]
    return OracleResult(
        instance=(n, k, m),
        optimum=best if best is not None else 0,
        witnesses=witnesses,
        witness_count=count,
        nodes=total,
        elapsed=time.perf_counter() - t0,
    )


@dataclass
class ClassifyReport:
    """Structure survey of every maximum (k,l)-sum-free subset of Z_n."""

    n: int
    k: int
    l: int
    optimum: int
    count: int
    all_are_aps: bool
    exceptions: list[ResidueSet]
    nodes: int = 0
    elapsed: float = 0.0


def classify_max_sets(n: int, k: int, l: int, *, cap: int | None = None) -> ClassifyReport:
    """Enumerate all maximum sets and test each for progression structure."""
    limit = MAX_CLASSIFY if cap is None else cap
    if n > limit:
        raise InstanceTooLarge(f"classification capped at n <= {limit}, got {n}")
    t0 = time.perf_counter()
    result = max_sumfree_bruteforce(n, k, l, enumerate_all=True, cap=limit)
    exceptions = [w for w in result.witnesses if not is_arithmetic_progression(w)]
    return ClassifyReport(
        n=n,
        k=k,
        l=l,
        optimum=result.optimum,
        count=result.witness_count or 0,
        all_are_aps=not exceptions,
        exceptions=exceptions,
        nodes=result.nodes,
        elapsed=time.perf_counter() - t0,
    )


def max_sumfree_bruteforce_group(
    G: AbelianGroup,
    k: int,
    l: int,
    *,
    enumerate_all: bool = False,
    prune: bool = True,
    witness_cap: int = WITNESS_CAP,
) -> OracleResult:
    """Exhaustive maximum (k,l)-sum-free subset search over a small abelian group.

    Same branch-and-bound as the cyclic search, with sumset updates driven
    by the dense addition table (group order capped at 64 by GroupTable).
    Witnesses are frozensets of coordinate tuples.
    """
    check_pair(k, l)
    table = GroupTable(G)
    n = table.order
    t0 = time.perf_counter()

    translate = table.translate
    nodes = 0
    best = 0
    best_masks = [0]
    count = 1
    base = [1] + [0] * k

    def extend(sums: list[int], x: int) -> list[int]:
        out = [1]
        prev = 1
        for h in range(1, k + 1):
            prev = sums[h] | translate(prev, x)
            out.append(prev)
        return out

    if not enumerate_all:
        sums = base
        mask = 0
        size = 0
        for x in range(1, n):
            new = extend(sums, x)
            if new[k] & new[l]:
                continue
            sums, mask, size = new, mask | (1 << x), size + 1
        if size > 0:
            best, best_masks, count = size, [mask], 1

    def rec(start: int, size: int, sums: list[int], mask: int) -> None:
        nonlocal nodes, best, best_masks, count
        for x in range(start, n):
            if prune and size + (n - x) <= (best - 1 if enumerate_all else best):
                break
            nodes += 1
            new = extend(sums, x)
            if new[k] & new[l]:
                continue
            nsize = size + 1
            nmask = mask | (1 << x)
            if nsize > best:
                best, best_masks, count = nsize, [nmask], 1
            elif nsize == best and enumerate_all:
                count += 1
                if len(best_masks) < witness_cap:
                    best_masks.append(nmask)
            rec(x + 1, nsize, new, nmask)

    rec(1, 0, base, 0)
    elements = table.elements
    witnesses = []
    for m in sorted(best_masks):
        members = []
        while m:
            low = m & -m
            members.append(elements[low.bit_length() - 1])
            m ^= low
        witnesses.append(frozenset(members))
    return OracleResult(
        instance=(G.invariant_factors, k, l),
        optimum=best,
        witnesses=witnesses,
        witness_count=count if enumerate_all else None,
        nodes=nodes,
        elapsed=time.perf_counter() - t0,
    )
