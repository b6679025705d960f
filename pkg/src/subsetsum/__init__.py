"""Subset-sum complement constructions: P(A) = N \\ B.

Build A for the recurrence and arithmetic-progression families of B, check
every stage against a bit-vector subset-sum oracle, and certify
non-existence for short B prefixes by exhaustive search.
"""
from .construct import (
    ConstructionTrace,
    Stage,
    build_a1,
    build_a_thm11,
    build_a_thm13,
    expected_pattern_fact1,
    expected_pattern_fact2,
)
from .errors import InvalidInput, NoBaseConstruction, Overflow, ResourceLimit
from .search import SearchNode, SearchOutcome, admissible_extensions, nonexistence_search
from .sequences import BClassification, BSpec, classify_b, gen_b_ap, gen_b_thm11
from .sumset import (
    HolePattern,
    SumSet,
    add_element,
    empty_sumset,
    holes_in_range,
    matches_pattern,
    subset_sums,
)
from .verify import check_lemma21, verify_complement, verify_trace

__all__ = [
    "BClassification", "BSpec", "ConstructionTrace", "HolePattern", "InvalidInput",
    "NoBaseConstruction", "Overflow", "ResourceLimit", "SearchNode", "SearchOutcome",
    "Stage", "SumSet", "add_element", "admissible_extensions", "build_a1", "build_a_thm11",
    "build_a_thm13", "check_lemma21", "classify_b", "empty_sumset", "expected_pattern_fact1",
    "expected_pattern_fact2", "gen_b_ap", "gen_b_thm11", "holes_in_range", "matches_pattern",
    "nonexistence_search", "subset_sums", "verify_complement", "verify_trace",
]
