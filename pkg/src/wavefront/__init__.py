"""Traveling wavefronts of delayed monostable reaction-diffusion equations.

Construct piecewise-linear unimodal birth functions, analyse the
characteristic quasipolynomials (critical speeds, admissibility region),
solve wave profiles as fixed points of the exact integral operator,
classify their oscillation type, and cross-check against a direct PDE
simulation.
"""

from .birth import (PiecewiseLinearBirth, HypothesisReport, construct, from_dict,
                    check_um, check_fc, check_subtangency, critical_secant_slope,
                    lipschitz_constant)
from .spectrum import (Quasipolynomial, WaveContext, SpectrumReport, DomainCheck,
                       base_roots, real_roots, critical_speed, in_domain_DL,
                       gamma, gamma1, rho_pair, xi, complex_roots_in_rect,
                       make_context, chi0, chi_kappa, mu_roots, lambda_roots)
from . import errors

__all__ = [
    "PiecewiseLinearBirth", "HypothesisReport", "construct", "from_dict",
    "check_um", "check_fc", "check_subtangency", "critical_secant_slope",
    "lipschitz_constant",
    "Quasipolynomial", "WaveContext", "SpectrumReport", "DomainCheck",
    "base_roots", "real_roots", "critical_speed", "in_domain_DL",
    "gamma", "gamma1", "rho_pair", "xi", "complex_roots_in_rect",
    "make_context", "chi0", "chi_kappa", "mu_roots", "lambda_roots",
    "errors",
]

PAPER_PARAMS = {"k1": 3.0, "k2": -3.0, "k3": -0.25, "theta": 1.0 / 3.0, "kappa": 0.53}
PAPER_H = 2.0


def reference_model() -> PiecewiseLinearBirth:
    """The bundled reference parameter set (k1=3, k2=-3, k3=-0.25,
    theta=1/3, kappa=0.53) used by the replication battery."""
    return from_dict(PAPER_PARAMS)
