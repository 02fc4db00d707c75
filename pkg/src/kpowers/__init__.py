"""k-th powers of paths and cycles in graphs of high minimum degree.

Threshold functions, the extremal graphs that attain them, K_{k+1}-component
structure with connected clique factors, exact and constructive searches for
power paths and cycles, and a verification harness tying them together.
"""

from .errors import (
    BudgetExceeded,
    DomainError,
    ExtensionFailure,
    HypothesisViolation,
    InsertionFailure,
    PreconditionError,
    ResourceLimit,
)
from .extremal import ExtremalLayout, build_G_c, build_G_p, construct_longest_power_path, certify_upper_bound
from .graphs import Graph, from_graph6, to_graph6
from .thresholds import PowerParams, ThresholdProfile, compute_profile, compute_r, threshold_table

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "ExtensionFailure",
    "ExtremalLayout",
    "Graph",
    "HypothesisViolation",
    "InsertionFailure",
    "PowerParams",
    "PreconditionError",
    "ResourceLimit",
    "ThresholdProfile",
    "build_G_c",
    "build_G_p",
    "certify_upper_bound",
    "compute_profile",
    "compute_r",
    "construct_longest_power_path",
    "from_graph6",
    "threshold_table",
    "to_graph6",
]
