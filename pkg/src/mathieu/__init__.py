"""Exact permutation-group engine for the multiply transitive groups on
7 to 24 points, with the classification pipeline that constructs the
Mathieu groups from substitution formulas, a verification harness, and
an HTTP service plus CLI on top.
"""

__version__ = "0.1.0"

from .engine import BudgetExceeded, PermutationGroup, StabilizerChain
from .gf import INF, FieldElement, FieldSpec, gf
from .perm import CycleForm, Perm

__all__ = [
    "BudgetExceeded",
    "CycleForm",
    "FieldElement",
    "FieldSpec",
    "INF",
    "Perm",
    "PermutationGroup",
    "StabilizerChain",
    "gf",
    "__version__",
]
