"""132-avoiding permutations, plane trees, and the bijections between them.

The package provides the four run/segment/envelope decompositions, the two
tree bijections with inverses, the set-alternating small-forest bijection,
exact closed-form counters, and an exhaustive brute-force verification engine
with a CLI and HTTP front end.
"""
from .alternating import AltLabel, SmallForest, alt_tree_to_forest, forest_to_alt_tree
from .bijections import (
    LabeledTree,
    jr_labeled_tree,
    jr_perm_to_tree,
    jr_tree_to_perm,
    phi_canonical_labeling,
    phi_perm_to_tree,
    phi_tree_to_perm,
)
from .counting import (
    binomial,
    bounded_compositions,
    catalan,
    count_bounded_ir,
    count_bounded_runs,
    count_consec_pattern,
    count_start_descents,
    count_start_end_descents,
    gen_narayana,
    kappa,
    kappa_dp,
    lemma_a1_check,
    narayana,
)
from .decompositions import Decomposition, Segment, decompose, drd, ird, lde, length_distribution, vcis
from .errors import DomainError, ParseError, ResourceLimitError
from .oracle import VerificationReport, available_claims, run_claim
from .permutations import (
    Permutation,
    avoids_132,
    consecutive_occurrences,
    contains_pattern,
    ascent_set,
    descent_set,
    enumerate_avoiders,
    lis_from,
    maximal_run_drop_count,
)
from .series import TruncatedSeries
from .trees import (
    PlaneTree,
    enumerate_trees,
    heights,
    internal_outdegrees,
    leaf_heights,
    left_paths,
    level_profile,
    level_switch,
    mirror,
    parse_tree,
    right_paths,
    rsw,
    rsw_multiset,
    rsw_tree,
    to_text,
    tree_height,
)

__version__ = "0.1.0"
