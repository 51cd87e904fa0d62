"""Boggle logic puzzles on king's graphs.

A word list is a puzzle when exactly one board, up to rotation and
reflection, contains every word. This package provides the board and word
machinery, the graph-theoretic uniqueness test, exhaustive censuses and
extremal scans for the 3x3 board, probabilistic reconstruction estimates,
and repeated-letter board classification.
"""

from .board import (
    Board,
    apply_symmetry,
    boards_equivalent,
    canonical_board,
    dihedral_orbit,
    find_word_path,
    permute_board,
    standard_board,
    word_on_board,
    word_set,
    words_from_strings,
)
from .census import (
    CensusEntry,
    census_min_edges,
    is_puzzle_mask,
    isomorphism_class_count,
    minimal_census,
    puzzle_counts_by_size,
)
from .errors import (
    BoggleError,
    InvalidComparisonError,
    InvalidDimensionError,
    InvalidPermutationError,
    InvalidPuzzleError,
    InvalidWordError,
    ParseError,
    PatternError,
    PuzzlePreconditionError,
    ResourceLimitError,
)
from .extremal import (
    ExhaustiveScan,
    OverlapResult,
    Threshold,
    guarantee_threshold,
    max_overlap_exhaustive,
    overlap,
    overlap_search,
)
from .graphs import (
    AdjacencyGraph,
    adjacency_graph,
    automorphisms,
    canonical_form,
    count_monomorphisms,
    graph_from_edges,
    is_labeling_subgraph,
    is_unique_subgraph,
    labeling_report,
)
from .kinggraph import (
    DihedralElement,
    PathCatalog,
    build_king_graph,
    dihedral_group,
    path_catalog,
)
from .multiset import (
    EquivalenceClassReport,
    classify,
    enumerate_boards,
    normalize_partition,
    pattern_count,
    word_signature,
)
from .puzzles import (
    Puzzle,
    SolveReport,
    is_minimal,
    is_puzzle,
    minimize,
    solve,
)
from .reproduce import reproduce
from .stochastic import (
    EstimateReport,
    ProbabilityEstimate,
    SamplingConfig,
    exact_two_letter_curve,
    monte_carlo_words_to_unique,
    probability_at,
)

__version__ = "0.1.0"
