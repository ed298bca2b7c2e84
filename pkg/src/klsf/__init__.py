"""Maximum (k,l)-sum-free sets in finite cyclic and abelian groups.

A set A of residues modulo n is (k,l)-sum-free when no sum of k elements
of A equals a sum of l elements, i.e. the k-fold and l-fold sumsets are
disjoint.  This package computes the maximum size of such a set by closed
formula, constructs witness sets with machine-checkable certificates, and
ships exhaustive-search oracles for independent cross-checks.
"""

from .arith import ceil_div, divisors, is_prime, mod_inverse
from .construct import (
    ConstructionCertificate,
    max_interval,
    max_witness_cyclic,
    middle_set,
    two_short_of_ap,
    witness_with_certificate,
)
from .errors import (
    InstanceTooLarge,
    KlsfError,
    ModulusMismatch,
    NonInvertible,
    NoWitness,
    NotADivisor,
    NotSumFree,
    OutOfRange,
)
from .formulas import (
    DivisorRow,
    IntervalCapacity,
    MuReport,
    interval_feasible,
    max_interval_size,
    min_additive_pairs,
    mu_abelian_lower,
    mu_bounds,
    mu_cyclic,
    mu_prime,
)
from .groups import (
    AbelianGroup,
    ArithmeticProgression,
    Interval,
    ResidueSet,
    SumPair,
    abelian_groups_of_order,
    ap_to_set,
    dilate,
    format_set_literal,
    is_arithmetic_progression,
    lift_through_quotient,
    parse_set_literal,
)
from .oracle import (
    ClassifyReport,
    OracleResult,
    classify_max_sets,
    max_ap_bruteforce,
    max_sumfree_bruteforce,
    max_sumfree_bruteforce_group,
    min_additive_tuples_bruteforce,
)
from .sumsets import (
    GroupTable,
    add_element_sumsets,
    count_additive_tuples,
    h_fold_sumset,
    is_complete,
    is_kl_sumfree,
    pairwise_sumset,
)
from .survey import SurveyRow, run_survey

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "ArithmeticProgression",
    "ClassifyReport",
    "ConstructionCertificate",
    "DivisorRow",
    "GroupTable",
    "InstanceTooLarge",
    "Interval",
    "IntervalCapacity",
    "KlsfError",
    "ModulusMismatch",
    "MuReport",
    "NonInvertible",
    "NotADivisor",
    "NotSumFree",
    "NoWitness",
    "OracleResult",
    "OutOfRange",
    "ResidueSet",
    "SumPair",
    "SurveyRow",
    "abelian_groups_of_order",
    "add_element_sumsets",
    "ap_to_set",
    "ceil_div",
    "classify_max_sets",
    "count_additive_tuples",
    "dilate",
    "divisors",
    "format_set_literal",
    "h_fold_sumset",
    "interval_feasible",
    "is_arithmetic_progression",
    "is_complete",
    "is_kl_sumfree",
    "is_prime",
    "lift_through_quotient",
    "max_ap_bruteforce",
    "max_interval",
    "max_interval_size",
    "max_sumfree_bruteforce",
    "max_sumfree_bruteforce_group",
    "max_witness_cyclic",
    "middle_set",
    "min_additive_pairs",
    "min_additive_tuples_bruteforce",
    "mod_inverse",
    "mu_abelian_lower",
    "mu_bounds",
    "mu_cyclic",
    "mu_prime",
    "parse_set_literal",
    "pairwise_sumset",
    "run_survey",
    "two_short_of_ap",
    "witness_with_certificate",
    "__version__",
]
