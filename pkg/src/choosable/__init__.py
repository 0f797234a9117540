"""List multicoloring of weighted paths and free-choosability of cycles."""

from .model import (
    BudgetExceededError,
    Certificate,
    Color,
    Coloring,
    Decision,
    InternalInvariantError,
    Instance,
    InvalidInputError,
    ListAssignment,
    NotGoodError,
    NotWaterfallError,
    PreconditionError,
    Rational,
    Topology,
    Weights,
    amplitude,
    as_lists,
    as_weights,
    is_good,
    is_waterfall,
    validate_coloring,
)
from .waterfall import (
    ColorRename,
    ColorSpan,
    TransformReport,
    color_spans,
    normalize_runs,
    pull_back_coloring,
    to_waterfall,
)
from .hall import (
    HallSummand,
    alpha_path,
    construct_coloring_general,
    construct_coloring_waterfall,
    decide_waterfall,
    decide_waterfall_prefix,
    hall_check_path,
    hall_summands,
)
from .cycles import (
    ChoiceParameters,
    FreeChoiceInstance,
    counterexample_list,
    cycle_to_path,
    endpoint_threshold,
    even_ceil,
    fchr,
    is_free_choosable,
    solve_free_choice,
)
from .oracle import SearchBudget, brute_force, brute_force_forced

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Certificate",
    "ChoiceParameters",
    "Color",
    "ColorRename",
    "ColorSpan",
    "Coloring",
    "Decision",
    "FreeChoiceInstance",
    "HallSummand",
    "InternalInvariantError",
    "Instance",
    "InvalidInputError",
    "ListAssignment",
    "NotGoodError",
    "NotWaterfallError",
    "PreconditionError",
    "Rational",
    "SearchBudget",
    "Topology",
    "TransformReport",
    "Weights",
    "alpha_path",
    "amplitude",
    "as_lists",
    "as_weights",
    "brute_force",
    "brute_force_forced",
    "color_spans",
    "construct_coloring_general",
    "construct_coloring_waterfall",
    "counterexample_list",
    "cycle_to_path",
    "decide_waterfall",
    "decide_waterfall_prefix",
    "endpoint_threshold",
    "even_ceil",
    "fchr",
    "hall_check_path",
    "hall_summands",
    "is_free_choosable",
    "is_good",
    "is_waterfall",
    "normalize_runs",
    "pull_back_coloring",
    "solve_free_choice",
    "to_waterfall",
    "validate_coloring",
]
