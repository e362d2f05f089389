"""Numeric tolerances shared by every check.

All thresholds live here so a report can always be traced back to one value.
"""

from pydantic import BaseModel, ConfigDict


class Tolerances(BaseModel):
    """Frozen record of absolute tolerances."""

    model_config = ConfigDict(frozen=True)

    # Eigenpairs
    unit_norm: float = 1e-12
    residual: float = 1e-8
    psd_floor: float = -1e-9
    jacobi_offdiag: float = 1e-13  # relative to 1 + ||M||_F
    jacobi_max_sweeps: int = 100
    reconstruction: float = 1e-9  # relative to 1 + ||M||_inf
    orthonormality: float = 1e-10
    sign_tie: float = 1e-12

    # Spectral laws
    bipartite_qmin: float = 1e-9
    non_bipartite_qmin: float = 1e-6
    quadratic_form: float = 1e-10
    rayleigh_slack: float = 1e-9
    unit_input: float = 1e-9
    oracle: float = 1e-9

    # Eigenvector structure
    gap_guard: float = 1e-9
    gap_zero: float = 1e-12  # smaller gaps are reported as exactly 0
    symmetry: float = 1e-8
    sign_product: float = 1e-12
    chain_margin: float = 1e-10
    chain_floor: float = 1e-12
    branch_nonzero: float = 1e-8
    branch_margin: float = 1e-10

    # Relocation
    relocation_slack: float = 1e-10
    relocation_equality: float = 1e-9
    hypothesis_slack: float = 1e-12

    # Extremal comparisons
    tie: float = 1e-9
    sweep_margin: float = 1e-9
    runner_up_gap: float = 1e-9


TOLERANCES = Tolerances()
