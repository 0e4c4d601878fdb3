"""Reduced words, quadruple crossing classes, and sweep words.

The package enumerates, counts, and uniformly samples reduced words for the
longest element of the symmetric group, restricts them to wire subsets,
classifies four wire restrictions into the REENTRANT/C1/C2/C3 orbits, and
connects the combinatorics to the classical four point probability through
sweep words of planar point sets.
"""

from .errors import (
    CheckpointMismatch,
    DegenerateConfiguration,
    InvalidPrefix,
    MalformedTableau,
    ResourceLimit,
    RetriesExhausted,
    SylvesterError,
)
from .words import (
    Crossing,
    apply_letter,
    count_reduced_words,
    enumerate_words,
    flip_word,
    format_word,
    identity,
    is_reduced_word_for_long_word,
    longest_element,
    parse_word,
    reverse_word,
    word_length,
    word_product,
    word_to_crossings,
)
from .streams import CounterRng
from .tableaux import (
    StaircaseTableau,
    hook_lengths,
    sample_tableau,
    sample_uniform_word,
    tableau_to_word,
    word_to_tableau,
)
from .restriction import (
    CLASS_LABELS,
    class_subset_counts,
    classify,
    is_reentrant,
    quad_classes,
    reentrant_subset_count,
    reentrant_words,
    restrict,
    validate_subset,
)
from .engine import (
    DEFAULT_BUDGET,
    McEstimate,
    PairCountReport,
    class_pair_counts,
    exact_probability,
    load_checkpoint,
    monte_carlo_probability,
    report_to_csv,
    sample_word_counts,
)
from .geometry import (
    HullEstimate,
    PointConfig,
    Region,
    RestrictionEstimate,
    SweepHistogram,
    check_general_position,
    classify_config,
    in_convex_position,
    read_point_config,
    restriction_probability,
    sample_region,
    sweep_histogram,
    sweep_word,
    sylvester_probability,
)

__version__ = "0.1.0"
