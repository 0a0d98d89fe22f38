"""Alternating branching VASS with full zero tests."""

from ._vec import BACKEND
from .core import (
    EXPANSIVE,
    INCREASING,
    LOSSY,
    STRICT,
    Configuration,
    DeductionTree,
    ForkRule,
    Instance,
    Report,
    Semantics,
    SplitRule,
    Step,
    System,
    UnaryRule,
    ZeroRule,
    validate_tree,
)
from .decide import (
    Decision,
    bound_H,
    bound_Hprime,
    brute_force,
    decide,
    decide_bounded_height,
    decide_expansive,
    decide_increasing,
    decide_lossy,
    decide_strict_bounded,
    tower,
)
from .reduce import (
    back_translate,
    coverability_view,
    eliminate_zero_tests,
    increasing_view,
    to_ordinary,
    to_pseudo_increasing,
)

__all__ = [
    "BACKEND", "Configuration", "Decision", "DeductionTree", "EXPANSIVE", "ForkRule", "INCREASING",
    "Instance", "LOSSY", "Report", "STRICT", "Semantics", "SplitRule", "Step", "System", "UnaryRule",
    "ZeroRule", "back_translate", "bound_H", "bound_Hprime", "brute_force", "coverability_view",
    "decide", "decide_bounded_height", "decide_expansive", "decide_increasing", "decide_lossy",
    "decide_strict_bounded", "eliminate_zero_tests", "increasing_view", "to_ordinary",
    "to_pseudo_increasing", "tower", "validate_tree",
]
