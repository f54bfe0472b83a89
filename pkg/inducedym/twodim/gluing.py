"""Gluing checks for the continuum partition function and the Haar identities behind them."""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_legendre

from ..config import Config
from ..errors import BudgetExceeded, InvalidInput, QuadratureError
from ..logging import get_logger, warn_near_limit
from ..repn import (
    IrrepSignature,
    character_from_weights,
    character_of_matrices,
    enumerate_signatures,
    torus_grid,
    weyl_dimension,
    weyl_integral,
)
from .continuum import ContinuumParams, z_genus

logger = get_logger(__name__)

MAX_GLUE_NC = 2
# Point pairs allowed in the full U(2) x U(2) torus integral.
MAX_TORUS_PAIRS = 2 ** 20


# ── Haar quadrature on U(1) and U(2) ──────────────────────────────────


def haar_quadrature(n_c: int, degree: int, with_phase: bool = True) -> tuple[np.ndarray, np.ndarray]:
    """
    Product rule on U(n_c), n_c in {1, 2}, exact for polynomials of the
    given total degree in the matrix entries and their conjugates.

    U(2) uses U = e^{i phi} [[a, -conj(b)], [b, conj(a)]] with
    a = sqrt(1-u) e^{i xi1}, b = sqrt(u) e^{i xi2}; Haar measure is uniform
    in (u, xi1, xi2, phi) on [0,1] x [0, 2 pi)^3. Angles use trapezoid
    rules with degree + 1 points and u uses Gauss-Legendre. With
    with_phase=False the U(2) rule drops phi and covers SU(2) only.

    Returns:
        (matrices of shape (K, n_c, n_c), weights of shape (K,) summing to 1)
    """
    if degree < 0:
        raise InvalidInput("degree must be non-negative", module="twodim")
    m = degree + 1
    angles = 2 * np.pi * np.arange(m) / m
    if n_c == 1:
        mats = np.exp(1j * angles)[:, None, None]
        return mats, np.full(m, 1.0 / m)
    if n_c != 2:
        raise BudgetExceeded("Haar product rules are provided for U(1) and U(2)", module="twodim")

    t, w = roots_legendre(degree // 2 + 1)
    u = 0.5 * (t + 1.0)
    wu = 0.5 * w
    phases = angles if with_phase else np.zeros(1)
    U, X1, X2, P = np.meshgrid(u, angles, angles, phases, indexing="ij")
    W = np.broadcast_to(wu[:, None, None, None], U.shape) / (m * m * len(phases))
    a = np.sqrt(1.0 - U) * np.exp(1j * X1)
    b = np.sqrt(U) * np.exp(1j * X2)
    phase = np.exp(1j * P)
    mats = np.empty(U.shape + (2, 2), dtype=complex)
    mats[..., 0, 0] = a
    mats[..., 0, 1] = -np.conj(b)
    mats[..., 1, 0] = b
    mats[..., 1, 1] = np.conj(a)
    mats = mats * phase[..., None, None]
    return mats.reshape(-1, 2, 2), W.reshape(-1).copy()


def _character_degree(*sigs: IrrepSignature) -> int:
    """Entry-degree bound for a product of characters.

    chi_lambda = det^{lambda_N} chi_{lambda - lambda_N}, and det^{-1} = conj(det)
    has degree N in the conjugate entries.
    """
    return sum(
        sum(p - sig.parts[-1] for p in sig.parts) + sig.n_c * abs(sig.parts[-1]) for sig in sigs
    )


def convolution_identity_error(
    lam: IrrepSignature,
    mu: IrrepSignature,
    v: np.ndarray,
    w: np.ndarray,
) -> float:
    """|int chi_lam(V U^-1) chi_mu(U W) dU - delta_{lam,mu} chi_lam(V W) / d_lam|."""
    n_c = lam.n_c
    mats, weights = haar_quadrature(n_c, _character_degree(lam, mu))
    inv = np.conj(np.swapaxes(mats, -1, -2))
    left = character_of_matrices(lam, v @ inv)
    right = character_of_matrices(mu, mats @ w)
    integral = complex(np.sum(weights * left * right))
    expected = 0.0
    if lam == mu:
        expected = complex(character_of_matrices(lam, (v @ w)[None])[0]) / weyl_dimension(lam)
    return abs(integral - expected)


def commutator_identity_error(lam: IrrepSignature, a: np.ndarray, b: np.ndarray) -> float:
    """|int chi_lam(U A U^-1 B) dU - chi_lam(A) chi_lam(B) / d_lam|."""
    mats, weights = haar_quadrature(lam.n_c, 2 * _character_degree(lam))
    inv = np.conj(np.swapaxes(mats, -1, -2))
    integral = complex(np.sum(weights * character_of_matrices(lam, mats @ a @ inv @ b)))
    chi_a = complex(character_of_matrices(lam, a[None])[0])
    chi_b = complex(character_of_matrices(lam, b[None])[0])
    return abs(integral - chi_a * chi_b / weyl_dimension(lam))


# ── Gluing ────────────────────────────────────────────────────────────


@dataclass
class GlueResult:
    surface: str
    glued: float
    direct: float
    cutoff: int
    grid: int

    @property
    def difference(self) -> float:
        return abs(self.glued - self.direct)

    def to_dict(self) -> dict:
        return {
            "surface": self.surface,
            "glued": self.glued,
            "direct": self.direct,
            "difference": self.difference,
            "cutoff": self.cutoff,
            "grid": self.grid,
        }


def _exact_grid(n_c: int, radius: int) -> int:
    """Smallest power of two M such that M/2 integrates the truncated products exactly."""
    degree = 2 * radius + 2 * (n_c - 1)
    m = 4
    while m // 2 <= degree:
        m *= 2
    return m


def _disk_on_grid(theta: np.ndarray, params: ContinuumParams, mu: float, sigs) -> np.ndarray:
    total = np.zeros(theta.shape[0], dtype=complex)
    for sig in sigs:
        damp = math.exp(-mu * params.energy(sig))
        total += weyl_dimension(sig) * damp * character_from_weights(sig, theta)
    return total


def _check_aliasing(fine: float, coarse: float, label: str) -> None:
    limit = Config.QUADRATURE_TOLERANCE * max(abs(fine), 1.0)
    if abs(fine - coarse) > limit:
        raise QuadratureError(
            f"{label}: halving the grid changed the result by {abs(fine - coarse):.3g}",
            module="twodim",
        )
    warn_near_limit(logger, f"{label}: aliasing", abs(fine - coarse), limit)


def _sphere_integral(params: ContinuumParams, mu_plus: float, mu_minus: float, sigs, m: int) -> float:
    theta = torus_grid(params.n_c, m)
    g_plus = _disk_on_grid(theta, params, mu_plus, sigs)
    g_minus = _disk_on_grid(theta, params, mu_minus, sigs)
    # Gamma(U^-1) = conj Gamma(U) for real coefficients
    return weyl_integral(g_plus * np.conj(g_minus), theta).real


def _torus_integral(params: ContinuumParams, mu: float, sigs, m: int) -> float:
    """Double integral of Gamma over the commutator, inner integral by the commutator identity."""
    theta = torus_grid(params.n_c, m)
    total = 0.0
    for sig in sigs:
        d = weyl_dimension(sig)
        chi = character_from_weights(sig, theta)
        outer = weyl_integral(np.abs(chi) ** 2 / d, theta).real
        total += d * math.exp(-mu * params.energy(sig)) * outer
    return total


def _torus_integral_u1(params: ContinuumParams, mu: float, sigs, m: int) -> float:
    """Full double integral over (A, B) in U(1)^2; the commutator is the identity."""
    angles = 2 * np.pi * np.arange(m) / m
    a, b = np.meshgrid(np.exp(1j * angles), np.exp(1j * angles), indexing="ij")
    commutator = np.angle(a * b * np.conj(a) * np.conj(b)).reshape(-1, 1)
    gamma = _disk_on_grid(commutator, params, mu, sigs)
    return float(np.mean(gamma).real)


def _su2_rule_size(degree: int) -> int:
    return (degree // 2 + 1) * (degree + 1) ** 2


def torus_double_integral(params: ContinuumParams, mu: float, max_abs: int) -> float:
    """
    Full int int Gamma(A B A^-1 B^-1, mu) dA dB with characters up to max_abs.

    The commutator does not see the central phases of A and B, so for
    N_c = 2 both run over the SU(2) product rule. Each rule is exact for
    the entry degree of the truncated disk amplitude.

    Raises:
        BudgetExceeded: for N_c > 2 or when the rule pairs exceed MAX_TORUS_PAIRS
    """
    if max_abs < 0:
        raise InvalidInput("max_abs must be non-negative", module="twodim")
    sigs = enumerate_signatures(params.n_c, max_abs)
    if params.n_c == 1:
        return _torus_integral_u1(params, mu, sigs, _exact_grid(1, max_abs))
    if params.n_c != 2:
        raise BudgetExceeded("the torus double integral supports N_c <= 2", module="twodim")
    degree = 2 * max(_character_degree(sig) for sig in sigs)
    if _su2_rule_size(degree) ** 2 > MAX_TORUS_PAIRS:
        raise BudgetExceeded(
            f"torus double integral at cutoff {max_abs} needs {_su2_rule_size(degree) ** 2} pairs",
            module="twodim",
        )
    mats, weights = haar_quadrature(2, degree, with_phase=False)
    inv = np.conj(np.swapaxes(mats, -1, -2))
    total = 0.0 + 0.0j
    for a, a_inv, w_a in zip(mats, inv, weights):
        theta = np.angle(np.linalg.eigvals(a @ mats @ a_inv @ inv))
        total += w_a * np.sum(weights * _disk_on_grid(theta, params, mu, sigs))
    logger.debug("torus double integral N_c=2 cutoff=%d: %d x %d points", max_abs, len(weights), len(weights))
    return float(total.real)


def glue_check(mu_plus: float, mu_minus: float, params: ContinuumParams) -> GlueResult:
    """
    Glue disks into a closed surface by Haar quadrature and compare with Z_g.

    genus 0: two disks of areas mu_plus and mu_minus glued along their
    boundary, int Gamma(U, mu_+) Gamma(U^-1, mu_-) dU = Z_0(mu_+ + mu_-).
    genus 1: one disk of area mu_plus + mu_minus with opposite edges
    identified, int int Gamma(A B A^-1 B^-1) dA dB = Z_1(mu_+ + mu_-).

    Both sides use the same character cutoff, so agreement is up to
    quadrature error only.

    Raises:
        QuadratureError: if halving the grid changes the glued value
    """
    if params.n_c > MAX_GLUE_NC:
        raise BudgetExceeded(f"gluing quadrature supports N_c <= {MAX_GLUE_NC}", module="twodim")
    if params.genus not in (0, 1):
        raise InvalidInput("glue_check covers the sphere (g=0) and torus (g=1)", module="twodim")
    if not (mu_plus > 0 and mu_minus > 0):
        raise InvalidInput("disk areas must be positive", module="twodim")

    total_mu = mu_plus + mu_minus
    radius = params.max_abs
    if radius is None:
        trial = ContinuumParams(
            mu=min(mu_plus, mu_minus),
            r=params.r,
            genus=0,
            kind=params.kind,
            n_c=params.n_c,
            tolerance=params.tolerance,
        )
        radius = z_genus(trial).radius
    direct = z_genus(
        ContinuumParams(
            mu=total_mu,
            r=params.r,
            genus=params.genus,
            kind=params.kind,
            n_c=params.n_c,
            max_abs=radius,
            tolerance=params.tolerance,
        )
    )

    sigs = enumerate_signatures(params.n_c, radius)
    m = _exact_grid(params.n_c, radius)
    if params.genus == 0:
        surface = "sphere"
        glued = _sphere_integral(params, mu_plus, mu_minus, sigs, m)
        coarse = _sphere_integral(params, mu_plus, mu_minus, sigs, m // 2)
    else:
        surface = "torus"
        glued = _torus_integral(params, total_mu, sigs, m)
        coarse = _torus_integral(params, total_mu, sigs, m // 2)
        if params.n_c == 1:
            full = _torus_integral_u1(params, total_mu, sigs, m)
            _check_aliasing(glued, full, "torus double integral")
        elif _su2_rule_size(2 * max(_character_degree(sig) for sig in sigs)) ** 2 <= MAX_TORUS_PAIRS:
            full = torus_double_integral(params, total_mu, radius)
            _check_aliasing(glued, full, "torus double integral")
    _check_aliasing(glued, coarse, f"{surface} gluing")

    logger.debug("%s gluing: glued=%.15g direct=%.15g cutoff=%d M=%d", surface, glued, direct.value, radius, m)
    return GlueResult(surface=surface, glued=glued, direct=float(direct.value), cutoff=radius, grid=m)
