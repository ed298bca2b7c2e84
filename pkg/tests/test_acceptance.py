"""Acceptance gate: every formula certified against an independent oracle.

Each test prints one PASS/FAIL line (run with -s to see them live) and
asserts exact agreement; where a runtime budget applies it is enforced
with a wall-clock bound measured around the sweep itself.  Criterion 9
checks the documented fixture claim literally for all four moduli; see
the README note on the two moduli where the size-versus-maximum clause
does not hold.
"""

import math
import random
import time

from klsf.arith import ceil_div, divisors, is_prime
from klsf.construct import middle_set, two_short_of_ap, witness_with_certificate
from klsf.formulas import (
    interval_feasible,
    max_interval_size,
    min_additive_pairs,
    mu_abelian_lower,
    mu_bounds,
    mu_cyclic,
    mu_prime,
)
from klsf.groups import ResidueSet, abelian_groups_of_order, dilate
from klsf.oracle import (
    classify_max_sets,
    max_ap_bruteforce,
    max_sumfree_bruteforce,
    max_sumfree_bruteforce_group,
    min_additive_tuples_bruteforce,
)
from klsf.sumsets import count_additive_tuples, h_fold_sumset, is_complete, is_kl_sumfree


def _report(name: str, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, f"{name}: {detail}"


def pair_grid(max_sum):
    return [(k, l) for k in range(2, max_sum) for l in range(1, k) if k + l <= max_sum]


def test_criterion_01_worked_instance():
    def evaluate():
        report = mu_cyclic(9, 5, 2)
        a = ResidueSet.from_elements(9, [1, 2])
        return (
            report.mu,
            mu_bounds(9, 5, 2),
            is_kl_sumfree(a, 5, 2),
            is_complete(a, 5, 2),
            h_fold_sumset(a, 5).mask,
            h_fold_sumset(a, 2).mask,
        )

    evaluate()  # warm caches before timing
    timings = []
    for _ in range(5):
        t0 = time.perf_counter()
        values = evaluate()
        timings.append(time.perf_counter() - t0)
    best = min(timings)
    expected = (
        2,
        (1, 3),
        True,
        True,
        ResidueSet.from_elements(9, [5, 6, 7, 8, 0, 1]).mask,
        ResidueSet.from_elements(9, [2, 3, 4]).mask,
    )
    ok = values == expected and best < 0.001
    _report(
        "criterion 1",
        ok,
        f"worked instance mu=2, bounds (1,3), exact sumsets; {best * 1e6:.0f} us",
    )


def test_criterion_02_formula_matches_oracle_on_grid():
    t0 = time.perf_counter()
    mismatches = []
    count = 0
    for n in range(1, 25):
        for k, l in pair_grid(9):
            count += 1
            if max_sumfree_bruteforce(n, k, l).optimum != mu_cyclic(n, k, l).mu:
                mismatches.append((n, k, l))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 600
    _report(
        "criterion 2",
        ok,
        f"{count} instances, {len(mismatches)} mismatches, {elapsed:.1f}s",
    )


def test_criterion_03_interval_formula_three_ways():
    t0 = time.perf_counter()
    mismatches = []
    for d in range(1, 121):
        for k, l in pair_grid(12):
            m0 = max_interval_size(d, k, l).size
            if interval_feasible(d, k, l, m0 + 1) or not interval_feasible(d, k, l, m0):
                mismatches.append(("feasibility", d, k, l))
                continue
            if max_ap_bruteforce(d, k, l, "coprime").optimum != m0:
                mismatches.append(("ap-oracle", d, k, l))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 120
    _report(
        "criterion 3",
        ok,
        f"d<=120, 30 pairs, {len(mismatches)} mismatches, {elapsed:.1f}s",
    )


def test_criterion_04_intervals_suffice():
    t0 = time.perf_counter()
    cache: dict[tuple[int, int, int, str], int] = {}

    def ap_max(d, k, l, cls):
        key = (d, k, l, cls)
        if key not in cache:
            cache[key] = max_ap_bruteforce(d, k, l, cls).optimum
        return cache[key]

    mismatches = []
    for n in range(1, 37):
        for k, l in pair_grid(9):
            alpha = max(ap_max(d, k, l, "any") * (n // d) for d in divisors(n))
            gamma = max(ap_max(d, k, l, "coprime") * (n // d) for d in divisors(n))
            if alpha != gamma:
                mismatches.append((n, k, l, alpha, gamma))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 300
    _report(
        "criterion 4",
        ok,
        f"n<=36 divisor maxima, {len(mismatches)} mismatches, {elapsed:.1f}s",
    )


def test_criterion_05_bounds_and_specializations():
    bad = []
    for n in range(1, 25):
        for k, l in pair_grid(9):
            mu = mu_cyclic(n, k, l).mu
            lower, upper = mu_bounds(n, k, l)
            if not lower <= mu <= upper:
                bad.append(("sandwich", n, k, l))
            if math.gcd(n, k - l) == 1:
                coprime = max(
                    ceil_div(d - 1, k + l) * (n // d) for d in divisors(n)
                )
                if mu != coprime:
                    bad.append(("coprime", n, k, l))
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        for k, l in pair_grid(9):
            expected = 0 if (k - l) % p == 0 else ceil_div(p - 1, k + l)
            if mu_prime(p, k, l) != expected or mu_cyclic(p, k, l).mu != expected:
                bad.append(("prime", p, k, l))
    _report(
        "criterion 5",
        not bad,
        f"sandwich + prime + coprime specializations, {len(bad)} failures",
    )


def test_criterion_06_witness_validity():
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for n in range(1, 201):
        for k, l in pair_grid(14):
            if (k - l) % n == 0:
                continue
            checked += 1
            witness, report, _ = witness_with_certificate(n, k, l)
            if len(witness) != report.mu or not is_kl_sumfree(witness, k, l):
                bad.append((n, k, l))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    _report(
        "criterion 6",
        ok,
        f"{checked} witnesses verified, {len(bad)} failures, {elapsed:.1f}s",
    )


def test_criterion_07_tuple_minimum_and_minimizers():
    t0 = time.perf_counter()
    bad = []
    for p in (5, 7, 11, 13):
        threshold = mu_prime(p, 2, 1)
        for m in range(1, p + 1):
            result = min_additive_tuples_bruteforce(p, 2, m)
            if result.optimum != min_additive_pairs(p, m):
                bad.append(("value", p, m))
                continue
            if m <= threshold:
                continue  # minimum is 0; every sum-free m-set attains it
            mid = middle_set(p, m)
            dilations = {dilate(mid, u).mask for u in range(1, p)}
            if result.witness_count != len(result.witnesses) or any(
                w.mask not in dilations for w in result.witnesses
            ):
                bad.append(("dilation", p, m))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 180
    _report(
        "criterion 7",
        ok,
        f"p in 5..13 all m, minimizers classified, {len(bad)} failures, {elapsed:.1f}s",
    )


def test_criterion_08_maximum_sets_are_progressions():
    t0 = time.perf_counter()
    bad = []
    for p in (2, 3, 5, 7, 11, 13):
        for k, l in pair_grid(9):
            if k < 3 or (k - l) % p == 0:
                continue
            report = classify_max_sets(p, k, l)
            if not report.all_are_aps:
                bad.append((p, k, l, len(report.exceptions)))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 180
    _report(
        "criterion 8",
        ok,
        f"primes <= 13, k >= 3 classification, {len(bad)} failures, {elapsed:.1f}s",
    )


def test_criterion_09_two_short_fixture():
    failures = []
    for n in (13, 16, 19, 22):
        a = two_short_of_ap(n)
        target = (n - 1) // 3
        mu = mu_cyclic(n, 2, 1).mu
        if not is_kl_sumfree(a, 2, 1):
            failures.append(f"n={n}: not sum-free")
        elif len(a) != target:
            failures.append(f"n={n}: size {len(a)} != {target}")
        elif mu != target:
            failures.append(f"n={n}: size {target} != mu {mu}")
    _report(
        "criterion 9",
        not failures,
        "fixture sum-free with size equal to the maximum for n in {13,16,19,22}"
        + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_10_engine_soundness():
    rng = random.Random(2024)
    mismatches = 0
    for _ in range(500):
        n = rng.randint(1, 48)
        h = rng.randint(1, 6)
        elements = [x for x in range(n) if rng.random() < 0.3]
        a = ResidueSet.from_elements(n, elements)
        expected: set[int] = set(elements)
        for _ in range(h - 1):
            expected = {(s + x) % n for s in expected for x in elements}
        if set(h_fold_sumset(a, h)) != expected:
            mismatches += 1
    count_mismatches = 0
    for _ in range(200):
        n = rng.randint(2, 48)
        elements = [x for x in range(n) if rng.random() < 0.4]
        a = ResidueSet.from_elements(n, elements)
        direct = sum(1 for x in elements for y in elements if (x + y) % n in a)
        if count_additive_tuples(a, 2) != direct:
            count_mismatches += 1
    ok = mismatches == 0 and count_mismatches == 0
    _report(
        "criterion 10",
        ok,
        f"500 h-fold + 200 counting cross-checks, {mismatches + count_mismatches} mismatches",
    )


def test_note_small_abelian_groups_match_lower_bound():
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for order in range(1, 33):
        for group in abelian_groups_of_order(order):
            checked += 1
            bound, _ = mu_abelian_lower(group, 2, 1)
            optimum = max_sumfree_bruteforce_group(group, 2, 1).optimum
            if optimum != bound:
                bad.append((group.invariant_factors, bound, optimum))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 600
    _report(
        "note",
        ok,
        f"exhaustive maximum equals lower-bound formula on {checked} groups"
        f" of order <= 32, {len(bad)} failures, {elapsed:.1f}s",
    )
