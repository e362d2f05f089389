"""Signless Laplacian, eigensolver and least-eigenvalue certificates."""

from spectral.matrix import SymMatrix, adjacency_array, signless_laplacian
from spectral.jacobi import EigenPair, eig_sym, eigh, jacobi_eigh, reconstruction_error
from spectral.least import SpectralResult, normalize_sign, q_min, q_spectrum
from spectral.forms import eigen_residual, odd_cycle_qmin_oracle, quadratic_form, rayleigh_check

__all__ = [
    "SymMatrix",
    "adjacency_array",
    "signless_laplacian",
    "EigenPair",
    "eig_sym",
    "eigh",
    "jacobi_eigh",
    "reconstruction_error",
    "SpectralResult",
    "normalize_sign",
    "q_min",
    "q_spectrum",
    "eigen_residual",
    "odd_cycle_qmin_oracle",
    "quadratic_form",
    "rayleigh_check",
]
