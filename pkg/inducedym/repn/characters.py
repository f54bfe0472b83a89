"""Characters of U(N_c) on the maximal torus and on general unitary matrices."""

import itertools
import math

import numpy as np

from ..config import Config
from ..errors import InvalidInput
from .signature import IrrepSignature
from .weights import weight_multiplicities


def alternant(exponents: tuple[int, ...], z: np.ndarray) -> np.ndarray:
    """det[z_k^{e_l}] for points z of shape (..., N)."""
    exps = np.asarray(exponents)
    mat = z[..., :, None] ** exps[None, :]
    return np.linalg.det(mat)


def _weight_sum(sig: IrrepSignature, theta: np.ndarray) -> np.ndarray:
    """sum over weights of multiplicity * exp(i n . theta), theta of shape (..., N)."""
    table = weight_multiplicities(sig)
    weights = np.array(list(table.multiplicities.keys()), dtype=float)
    mults = np.array(list(table.multiplicities.values()), dtype=float)
    phases = np.exp(1j * (theta @ weights.T))
    return phases @ mults


def min_eigenvalue_gap(theta: np.ndarray) -> float:
    z = np.exp(1j * np.asarray(theta, dtype=float))
    n = len(z)
    if n < 2:
        return math.inf
    return min(abs(z[k] - z[l]) for k, l in itertools.combinations(range(n), 2))


def character_at_torus(sig: IrrepSignature, theta) -> complex:
    """
    chi_lambda(diag(e^{i theta})) by the Weyl ratio xi_{lambda+rho} / xi_rho.

    Near coincident angles (gap below Config.DEGENERACY_THRESHOLD) the
    ratio is 0/0 and the weight-table sum is used instead; at theta = 0 this
    returns the dimension exactly.
    """
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (sig.n_c,):
        raise InvalidInput(f"expected {sig.n_c} angles, got shape {theta.shape}", module="repn")
    if min_eigenvalue_gap(theta) < Config.DEGENERACY_THRESHOLD:
        return complex(_weight_sum(sig, theta))
    z = np.exp(1j * theta)
    return complex(alternant(sig.shifted, z) / alternant(sig.rho, z))


def character_from_weights(sig: IrrepSignature, theta: np.ndarray) -> np.ndarray:
    """Vectorized weight-sum character for angle arrays of shape (..., N)."""
    return _weight_sum(sig, np.asarray(theta, dtype=float))


def character_of_matrices(sig: IrrepSignature, matrices: np.ndarray) -> np.ndarray:
    """Characters of a stack of unitary matrices (..., N, N) via their eigenphases."""
    eig = np.linalg.eigvals(matrices)
    theta = np.angle(eig)
    return _weight_sum(sig, theta)


# ── Weyl integration on the torus ─────────────────────────────────────


def torus_grid(n_c: int, m: int) -> np.ndarray:
    """Tensor-product trapezoid grid of angles, shape (m**n_c, n_c)."""
    angles = 2 * np.pi * np.arange(m) / m
    mesh = np.meshgrid(*([angles] * n_c), indexing="ij")
    return np.stack([g.ravel() for g in mesh], axis=-1)


def weyl_density(theta: np.ndarray) -> np.ndarray:
    """|Delta(e^{i theta})|^2 / N! for angle arrays of shape (..., N)."""
    z = np.exp(1j * theta)
    n = theta.shape[-1]
    dens = np.ones(theta.shape[:-1])
    for k, l in itertools.combinations(range(n), 2):
        dens = dens * np.abs(z[..., k] - z[..., l]) ** 2
    return dens / math.factorial(n)


def weyl_integral(values: np.ndarray, theta: np.ndarray) -> complex:
    """Haar integral of a class function sampled on a torus_grid."""
    return complex(np.mean(values * weyl_density(theta)))


def character_inner_product(lam: IrrepSignature, mu: IrrepSignature, m: int) -> complex:
    """Weyl-measure inner product of two characters by trapezoid quadrature."""
    theta = torus_grid(lam.n_c, m)
    chi_l = character_from_weights(lam, theta)
    chi_m = character_from_weights(mu, theta)
    return weyl_integral(chi_l * np.conj(chi_m), theta)
