"""Primorial-wheel prospective primes: enumeration, mixed-radix coding,
gap censuses and lineages, and prime-pair lower bounds."""

from .arith import is_prime, mod_inverse, nth_prime, prime_count_pi, primorial
from .census import (
    GapCensus,
    PairLineage,
    PropagationCase,
    classify_propagation,
    consecutive_pairs,
    derive_pairs,
    distribution_ratio,
    find_root_pair,
    gap_census,
    mhat_delta,
    per_subset_pair_census,
    predicted_derived_count,
    propagation_table,
    subset_gap_spectrum,
    table1,
)
from .codec import CoeffVector, decode, encode, is_admissible
from .primepairs import (
    BoundReport,
    actual_pair_count,
    bound_report,
    consecutive_primes_as_prospective,
    find_pair_above,
    growth_ratio,
    k_for_level,
    theorem3_lower_bound,
    verify_prospective_below_square,
)
from .wheel import (
    DisallowedIndex,
    WheelWindow,
    enumerate_prospective,
    is_prospective,
    mhat,
    propagate,
    subset_extremes,
    subset_of,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
