"""Repetitions in words: morphic generation, detection, verification, search."""

from .words import (
    CUBEFREE_MORPHISM,
    FORBIDDEN_FACTORS,
    Morphism,
    SQUAREFREE_MORPHISM,
    THUE_MORSE,
    WORD_NAMES,
    Word,
    WordStream,
    as_word,
    fixed_point_prefix,
    format_word,
    mapped_stream_prefix,
    named_prefix,
    named_stream,
    parse_word,
)
from .repetition import (
    RepetitionReport,
    SquareOccurrence,
    avoids_factors,
    contains_factor,
    factor_occurrences,
    find_cubes,
    find_overlaps,
    find_squares,
    is_cubefree,
    is_overlapfree,
    is_squarefree,
    max_square_root,
)
from .verification import (
    CHECKS,
    Decomposition,
    FORBIDDEN_BIGRAMS,
    InteriorOccurrence,
    Synchronization,
    VerificationReport,
    check_enumeration_counts,
    check_factor_closure,
    check_g_cube_shortlist,
    check_g_image_splits,
    check_g_image_witnesses,
    check_g_images_square_bound,
    check_g_interior_images,
    check_h_image_splits,
    check_h_images_squarefree,
    check_h_interior_images,
    check_template_1a3a2,
    decompose_overlapfree,
    enumerate_valid_words,
    find_interior_occurrences,
    find_synchronizations,
    legal_letter_pairs,
    run_all,
)
from .search import (
    AvoidancePredicate,
    LongestAvoiding,
    SearchReport,
    incremental_violation_check,
    longest_avoiding,
    search,
)

__version__ = "0.1.0"

__all__ = [
    "AvoidancePredicate",
    "CHECKS",
    "CUBEFREE_MORPHISM",
    "Decomposition",
    "FORBIDDEN_BIGRAMS",
    "FORBIDDEN_FACTORS",
    "InteriorOccurrence",
    "LongestAvoiding",
    "Morphism",
    "RepetitionReport",
    "SQUAREFREE_MORPHISM",
    "SearchReport",
    "SquareOccurrence",
    "Synchronization",
    "THUE_MORSE",
    "VerificationReport",
    "WORD_NAMES",
    "Word",
    "WordStream",
    "as_word",
    "avoids_factors",
    "check_enumeration_counts",
    "check_factor_closure",
    "check_g_cube_shortlist",
    "check_g_image_splits",
    "check_g_image_witnesses",
    "check_g_images_square_bound",
    "check_g_interior_images",
    "check_h_image_splits",
    "check_h_images_squarefree",
    "check_h_interior_images",
    "check_template_1a3a2",
    "contains_factor",
    "decompose_overlapfree",
    "enumerate_valid_words",
    "factor_occurrences",
    "find_cubes",
    "find_interior_occurrences",
    "find_overlaps",
    "find_squares",
    "find_synchronizations",
    "fixed_point_prefix",
    "format_word",
    "incremental_violation_check",
    "is_cubefree",
    "is_overlapfree",
    "is_squarefree",
    "legal_letter_pairs",
    "longest_avoiding",
    "mapped_stream_prefix",
    "max_square_root",
    "named_prefix",
    "named_stream",
    "parse_word",
    "run_all",
    "search",
]
