# Shared models
"""Status enums and error types"""

from .status import Verdict, ExecutionMode
from .errors import (
    SpecqError,
    GraphError,
    Graph6FormatError,
    ParameterDomainError,
    EigensolverConvergenceError,
    SizeGuardError,
    HypothesisError,
    ProofStepError,
    FamilyAssumptionError,
    EmptyClassError,
    CliUsageError,
)

__all__ = [
    # Status
    "Verdict",
    "ExecutionMode",
    # Errors
    "SpecqError",
    "GraphError",
    "Graph6FormatError",
    "ParameterDomainError",
    "EigensolverConvergenceError",
    "SizeGuardError",
    "HypothesisError",
    "ProofStepError",
    "FamilyAssumptionError",
    "EmptyClassError",
    "CliUsageError",
]
