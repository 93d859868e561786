"""Exact eigenvalue moments of the Jacobi ensemble via symmetric functions."""

from .asymptotics import Regime, convergence_probe, finite_N_single, limit_novaes, limit_partition, limit_single
from .exactnum import UnitScalar, det_exact, gamma_ratio, pochhammer
from .integrals import EnsembleSpec, selberg, z_norm
from .moments import MomentQuery, MomentResult, moment, moment_detail, moment_sweep
from .oracle import integrate_simplex_exact, mc_estimate
from .symfunc import SymExpansion, jack_J, jack_P, monomial_to_jackJ, monomial_to_schur

__version__ = "0.1.0"

__all__ = [
    "EnsembleSpec",
    "MomentQuery",
    "MomentResult",
    "Regime",
    "SymExpansion",
    "UnitScalar",
    "convergence_probe",
    "det_exact",
    "finite_N_single",
    "gamma_ratio",
    "integrate_simplex_exact",
    "jack_J",
    "jack_P",
    "limit_novaes",
    "limit_partition",
    "limit_single",
    "mc_estimate",
    "moment",
    "moment_detail",
    "moment_sweep",
    "monomial_to_jackJ",
    "monomial_to_schur",
    "pochhammer",
    "selberg",
    "z_norm",
]
