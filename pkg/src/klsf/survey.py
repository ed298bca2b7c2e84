"""Grid sweeps of cyclic maxima with optional oracle cross-checks.

A survey walks the rectangle of instances given by three inclusive ranges
(n, k, l), keeping only well-formed pairs k > l.  Each instance yields one
row: the closed-form maximum, the sandwich bounds, and, when the instance
is small enough, the branch-and-bound optimum.  The agree flag records
every cross-check available for the row: the bounds must enclose the
formula value, and the oracle, when it ran, must match it exactly.

Row order is the canonical (n, k, l) iteration order regardless of worker
count, so CSV output is byte-identical for any --workers value.  Workers
only split the instance list; each instance is deterministic on its own.
"""

from __future__ import annotations

import csv
import io
import multiprocessing
from dataclasses import dataclass
from typing import Optional

from .errors import InstanceTooLarge
from .formulas import mu_bounds, mu_cyclic
from .oracle import MAX_SUBSET_SEARCH, max_sumfree_bruteforce


@dataclass(frozen=True)
class SurveyRow:
    n: int
    k: int
    l: int
    mu: int
    lower_bound: int
    upper_bound: int
    mu_oracle: Optional[int]
    agree: bool


CSV_COLUMNS = ["n", "k", "l", "mu", "lower_bound", "upper_bound", "mu_oracle", "agree"]


def parse_range(text: str) -> tuple[int, int]:
    """Parse 'A..B' (inclusive) or a single 'N' into (low, high)."""
    s = text.strip()
    if ".." in s:
        left, _, right = s.partition("..")
        lo, hi = int(left), int(right)
    else:
        lo = hi = int(s)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad range {text!r}: need 1 <= low <= high")
    return lo, hi


def build_instances(
    n_range: tuple[int, int], k_range: tuple[int, int], l_range: tuple[int, int]
) -> list[tuple[int, int, int]]:
    """All (n, k, l) grid points with k > l, in canonical order."""
    return [
        (n, k, l)
        for n in range(n_range[0], n_range[1] + 1)
        for k in range(k_range[0], k_range[1] + 1)
        for l in range(l_range[0], l_range[1] + 1)
        if k > l
    ]


def evaluate_instance(args: tuple[int, int, int, int, int]) -> SurveyRow:
    """Compute one survey row; args is (n, k, l, oracle_max, hard_cap)."""
    n, k, l, oracle_max, hard_cap = args
    report = mu_cyclic(n, k, l)
    lower, upper = mu_bounds(n, k, l)
    oracle_value: Optional[int] = None
    if n <= oracle_max:
        oracle_value = max_sumfree_bruteforce(n, k, l, cap=hard_cap).optimum
    agree = lower <= report.mu <= upper
    if oracle_value is not None:
        agree = agree and oracle_value == report.mu
    return SurveyRow(n, k, l, report.mu, lower, upper, oracle_value, agree)


def run_survey(
    n_range: tuple[int, int],
    k_range: tuple[int, int],
    l_range: tuple[int, int],
    *,
    oracle_max: int = 0,
    workers: int = 1,
    hard_cap: int = MAX_SUBSET_SEARCH,
) -> list[SurveyRow]:
    """Evaluate the grid; raises InstanceTooLarge if oracle_max exceeds the cap."""
    if oracle_max > hard_cap:
        raise InstanceTooLarge(
            f"--oracle-max {oracle_max} exceeds the oracle cap {hard_cap}"
            " (KLSF_ORACLE_MAX overrides the cap)"
        )
    if workers < 1:
        raise ValueError(f"worker count must be positive, got {workers}")
    instances = build_instances(n_range, k_range, l_range)
    tasks = [(n, k, l, oracle_max, hard_cap) for (n, k, l) in instances]
    if workers == 1 or len(tasks) < 2:
        return [evaluate_instance(t) for t in tasks]
    with multiprocessing.Pool(workers) as pool:
        return pool.map(evaluate_instance, tasks)


def rows_to_csv(rows: list[SurveyRow]) -> str:
    """Render rows as RFC-4180 CSV text (CRLF line endings, header row)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\r\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow(
            [
                r.n,
                r.k,
                r.l,
                r.mu,
                r.lower_bound,
                r.upper_bound,
                "" if r.mu_oracle is None else r.mu_oracle,
                "true" if r.agree else "false",
            ]
        )
    return out.getvalue()
