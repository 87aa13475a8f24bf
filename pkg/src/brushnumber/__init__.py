"""Exact brush numbers, graph cleaning simulation and Mycielski constructions."""

from brushnumber.cleaning import (
    BrushAllocation,
    CleaningState,
    CleaningTrace,
    directed_simulate,
    is_cleanable,
    min_start_brushes,
    orientation_cost,
    simulate,
)
from brushnumber.errors import (
    BrushNumberError,
    InvalidInputError,
    ParseError,
    SearchIncomplete,
    TooLargeError,
)
from brushnumber.generators import generate
from brushnumber.graph import (
    Graph,
    MycielskiLabeling,
    Orientation,
    directed_mycielski,
    iterated_mycielski,
    mycielski,
)
from brushnumber.solver import (
    BrushNumberResult,
    branch_and_bound,
    brush_number,
    brute_force,
    exact_dp,
    lower_bound_odd,
)

__version__ = "0.1.0"

__all__ = [
    "BrushAllocation",
    "BrushNumberError",
    "BrushNumberResult",
    "CleaningState",
    "CleaningTrace",
    "Graph",
    "InvalidInputError",
    "MycielskiLabeling",
    "Orientation",
    "ParseError",
    "SearchIncomplete",
    "TooLargeError",
    "branch_and_bound",
    "brush_number",
    "brute_force",
    "directed_mycielski",
    "directed_simulate",
    "exact_dp",
    "generate",
    "is_cleanable",
    "iterated_mycielski",
    "lower_bound_odd",
    "min_start_brushes",
    "mycielski",
    "orientation_cost",
    "simulate",
]
