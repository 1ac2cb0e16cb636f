"""Weierstrass gap sequences: validation, enumeration, ladders and weights."""

from ._backend import BACKEND
from .core import (
    ErrorKind,
    GapSequence,
    NonGapSet,
    ValidationError,
    canonical,
    first_non_gap,
    is_closed_under_addition,
    is_valid,
    non_gaps,
    validate,
)
from .enumerator import (
    EnumerationResult,
    ResourceLimitError,
    TreeNode,
    brute_force_enumerate,
    count_by_genus,
    count_genus,
    filter_enumerate,
    iter_tree,
    tree_enumerate,
)
from .ladder import DimensionLadder, gaps_from_ladder, ladder_from_gaps, verify_ladder_laws
from .weierstrass import (
    Classification,
    PointCountBounds,
    WeightReport,
    classify,
    exceptional_sequence,
    hyperelliptic_sequence,
    implied_hyperelliptic_point_count,
    jenkins_forced_gap,
    point_count_bounds,
    weight,
)

__version__ = "0.1.0"
