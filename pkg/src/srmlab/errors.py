"""Exception hierarchy shared by all srmlab modules.

Every domain failure carries a short machine-readable ``code`` so the CLI
can emit a structured payload and exit 1, distinct from usage errors (2).
"""

from __future__ import annotations


class SrmLabError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "DOMAIN_ERROR"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def payload(self) -> dict:
        return {"error": self.code, "message": str(self), **self.details}


class DomainError(SrmLabError):
    """Invalid argument values (out of the documented domain)."""

    code = "DOMAIN_ERROR"


class InfeasibleGeometryError(SrmLabError):
    code = "INFEASIBLE_GEOMETRY"


class MeshFailureError(SrmLabError):
    code = "MESH_FAILURE"


class NonConvergenceError(SrmLabError):
    code = "NON_CONVERGENCE"

    def __init__(self, message: str, residual_history=None, **details):
        super().__init__(message, **details)
        self.residual_history = list(residual_history or [])


class SingularSystemError(SrmLabError):
    code = "SINGULAR_SYSTEM"


class ContourOutsideGapError(SrmLabError):
    code = "CONTOUR_OUTSIDE_GAP"


class EnvelopeMismatchError(SrmLabError):
    code = "ENVELOPE_MISMATCH"


class MapRangeExceededError(SrmLabError):
    code = "MAP_RANGE_EXCEEDED"


class StepUnstableError(SrmLabError):
    code = "STEP_UNSTABLE"


class NoFeasibleStartError(SrmLabError):
    code = "NO_FEASIBLE_START"
