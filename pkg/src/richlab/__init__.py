"""richlab: palindromic richness of finite words.

Analyze palindromic factors, switches and complete returns, verify the
complexity inequalities that relate them, enumerate rich words, and
cross-check everything against naive definition-chasing oracles.
"""

from .bounds import (
    BOUND_IDS,
    BoundReport,
    ClosureRequiredError,
    RichnessRequiredError,
    SweepSummary,
    WordProfile,
    check_ceil_product_lemma,
    diagnostic_trim_gamma_partition,
    evaluate_word,
    sweep_rich,
    word_profile,
)
from .crosscheck import (
    CellResult,
    CellSpec,
    compare_word,
    exhaustive_check,
    parse_cells,
    run_cell,
    run_cells,
)
from .enumeration import (
    EnumStats,
    count_rich,
    enumerate_rich,
    growth_root,
    rich_counts,
)
from .paltree import (
    Eertree,
    PalIndex,
    build_index,
    defect,
    is_rich,
    lpp,
    lppp,
    lps,
    lpps,
    palindrome_length_counts,
)
from .records import SwitchPair, SwitchRecord
from .structures import (
    CompressedPalindrome,
    CompressionDomainError,
    RauzyGraph,
    complete_returns,
    cores_with_lpps,
    is_strongly_connected,
    max_switch_count,
    pal_compress,
    pal_reconstruct,
    palindromic_closure,
    rauzy_graph,
    sentinel_augment,
    switch_cores,
    switch_pairs,
    switches,
)
from .words import (
    EMPTY,
    FactorSet,
    ParseError,
    Word,
    factors,
    is_palindrome,
    is_reversal_closed,
    mirror,
    palindromic_factors,
    reverse,
    trim,
)

__version__ = "1.0.0"

__all__ = [
    "BOUND_IDS",
    "BoundReport",
    "CellResult",
    "CellSpec",
    "ClosureRequiredError",
    "CompressedPalindrome",
    "CompressionDomainError",
    "EMPTY",
    "EnumStats",
    "Eertree",
    "FactorSet",
    "PalIndex",
    "ParseError",
    "RauzyGraph",
    "RichnessRequiredError",
    "SweepSummary",
    "SwitchPair",
    "SwitchRecord",
    "Word",
    "WordProfile",
    "build_index",
    "check_ceil_product_lemma",
    "compare_word",
    "complete_returns",
    "cores_with_lpps",
    "count_rich",
    "defect",
    "diagnostic_trim_gamma_partition",
    "enumerate_rich",
    "evaluate_word",
    "exhaustive_check",
    "factors",
    "growth_root",
    "is_palindrome",
    "is_reversal_closed",
    "is_rich",
    "is_strongly_connected",
    "lpp",
    "lppp",
    "lps",
    "lpps",
    "max_switch_count",
    "mirror",
    "pal_compress",
    "pal_reconstruct",
    "palindrome_length_counts",
    "palindromic_closure",
    "palindromic_factors",
    "parse_cells",
    "rauzy_graph",
    "reverse",
    "rich_counts",
    "run_cell",
    "run_cells",
    "sentinel_augment",
    "sweep_rich",
    "switch_cores",
    "switch_pairs",
    "switches",
    "trim",
    "word_profile",
]
