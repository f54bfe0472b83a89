"""
Haar sampling and Metropolis simulation of the induced and Wilson actions
on arbitrary cell complexes.
"""

from .action import PlaquetteAction, SingularAction, plaquette_actions
from .haar import haar_sample, haar_samples, random_hermitian, spawn_streams, unitary_exponential
from .links import LinkConfiguration
from .metropolis import MetropolisChain, mc_run, wilson_loop_mc
from .stats import Estimate, McReport, estimate, integrated_autocorrelation_time, merge_estimates

__all__ = [
    "spawn_streams",
    "haar_sample",
    "haar_samples",
    "random_hermitian",
    "unitary_exponential",
    "LinkConfiguration",
    "PlaquetteAction",
    "SingularAction",
    "plaquette_actions",
    "MetropolisChain",
    "mc_run",
    "wilson_loop_mc",
    "Estimate",
    "McReport",
    "estimate",
    "merge_estimates",
    "integrated_autocorrelation_time",
]
