"""Enumeration of independent generating sets of the symmetric groups S_n up to conjugacy."""

__version__ = "0.1.0"

from .permcore import (
    CycleType, Perm, compare, compose, conjugate, cycle_type, embed, format_cycles,
    inverse, parse_cycles, rank, unrank,
)
from .closure import ElementMask, GroupSignature, close, contains, is_full, order, signature, word_lengths
from .indep import PermSet, SetClassification, classify, is_generating, is_independent, is_maximal_independent
from .canon import (
    ConjugatorTable, canonical_rep, class_size, conjugator_candidates, conjugator_table,
    is_canonical, set_key,
)
from .search import (
    ClassDatabase, ClassRecord, brute_force_count, count_generating_pairs, dead_end_classes,
    enumerate_classes, size_distribution,
)
from .analyze import (
    GroupLabel, analyze_database, diameter, diameter_extremes, folklore, identify_group,
    incremental_class_count, is_incremental, is_strongly_incremental, lemma_extension_holds,
    symmetry_group,
)

__all__ = [
    "CycleType", "Perm", "compare", "compose", "conjugate", "cycle_type", "embed", "format_cycles",
    "inverse", "parse_cycles", "rank", "unrank",
    "ElementMask", "GroupSignature", "close", "contains", "is_full", "order", "signature", "word_lengths",
    "PermSet", "SetClassification", "classify", "is_generating", "is_independent", "is_maximal_independent",
    "ConjugatorTable", "canonical_rep", "class_size", "conjugator_candidates", "conjugator_table",
    "is_canonical", "set_key",
    "ClassDatabase", "ClassRecord", "brute_force_count", "count_generating_pairs", "dead_end_classes",
    "enumerate_classes", "size_distribution",
    "GroupLabel", "analyze_database", "diameter", "diameter_extremes", "folklore", "identify_group",
    "incremental_class_count", "is_incremental", "is_strongly_incremental", "lemma_extension_holds",
    "symmetry_group",
]
