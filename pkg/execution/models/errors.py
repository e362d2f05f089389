# SpecqError hierarchy
"""Error models shared by every package"""

from typing import Optional, Dict, Any, List
from datetime import datetime, timezone


class SpecqError(Exception):
    """Base exception for graph, spectral and verification errors"""

    error_code = "specq_error"

    def __init__(
        self,
        message: str,
        params: Optional[Dict[str, Any]] = None,
        original_error: Optional[Exception] = None,
        error_code: Optional[str] = None,
    ):
        super().__init__(message)
        self.message = message
        self.params = params or {}
        self.original_error = original_error
        if error_code is not None:
            self.error_code = error_code
        self.timestamp = datetime.now(timezone.utc)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "message": self.message,
            "error_type": type(self).__name__,
            "error_code": self.error_code,
            "params": self.params,
            "timestamp": self.timestamp.isoformat(),
            "original_error": str(self.original_error) if self.original_error else None,
        }


class GraphError(SpecqError):
    """Invalid vertex, loop edge or vertex cap exceeded"""

    error_code = "graph_error"


class Graph6FormatError(SpecqError):
    """Malformed or unsupported graph6 text"""

    error_code = "graph6_format"

    def __init__(self, message: str, line_number: Optional[int] = None, **kwargs: Any):
        super().__init__(message, **kwargs)
        self.line_number = line_number

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["line_number"] = self.line_number
        return data


class ParameterDomainError(SpecqError):
    """A parameter constraint was violated; `constraint` names it"""

    error_code = "parameter_domain"

    def __init__(self, message: str, constraint: str, **kwargs: Any):
        super().__init__(message, **kwargs)
        self.constraint = constraint

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["constraint"] = self.constraint
        return data


class EigensolverConvergenceError(SpecqError):
    """Jacobi sweeps exhausted before the off-diagonal norm converged"""

    error_code = "eigensolver_convergence"

    def __init__(self, message: str, off_norm: float, sweeps: int, **kwargs: Any):
        super().__init__(message, **kwargs)
        self.off_norm = off_norm
        self.sweeps = sweeps


class SizeGuardError(SpecqError):
    """Input exceeds an exhaustive-search size guard"""

    error_code = "size_guard"


class HypothesisError(SpecqError):
    """The hypothesis of a statement does not hold for the given input"""

    error_code = "hypothesis"


class ProofStepError(SpecqError):
    """An intermediate invariant of a constructive procedure failed"""

    error_code = "proof_step"

    def __init__(self, message: str, graph6: Optional[str] = None, **kwargs: Any):
        super().__init__(message, **kwargs)
        self.graph6 = graph6

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["graph6"] = self.graph6
        return data


class FamilyAssumptionError(SpecqError):
    """No member of a family realizes the requested domination number"""

    error_code = "family_assumption"

    def __init__(self, message: str, profile: List[int], **kwargs: Any):
        super().__init__(message, **kwargs)
        self.profile = profile

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["profile"] = self.profile
        return data


class EmptyClassError(SpecqError):
    """An exhaustive scan found no graph in the requested class"""

    error_code = "empty_class"


class CliUsageError(SpecqError):
    """Bad command line: unknown flag, missing argument or conflicting options"""

    error_code = "usage"
