import math

import numpy as np
import pytest

from inducedym.errors import BudgetExceeded, InvalidInput, TruncationError
from inducedym.montecarlo import haar_sample
from inducedym.repn import IrrepSignature, enumerate_signatures
from inducedym.twodim import (
    CasimirKind,
    ContinuumParams,
    cauchy_area_map,
    commutator_identity_error,
    convolution_identity_error,
    gamma_disk,
    glue_check,
    haar_quadrature,
    lattice_partition_closed_surface,
    quadratic_area_map,
    refinement_series,
    torus_double_integral,
    z_genus,
)
from inducedym.weights import ModelCouplings


# ── Continuum sums ────────────────────────────────────────────────────


def test_cauchy_torus_one_color():
    result = z_genus(ContinuumParams(mu=1.0, genus=1, kind="cauchy", n_c=1))
    assert result.value == pytest.approx(1 / math.tanh(0.5), rel=1e-9)
    assert result.tail_bound < 1e-8


@pytest.mark.parametrize("genus", [0, 1, 2])
def test_quadratic_one_color_is_theta_sum(genus):
    # every U(1) irrep has dimension one, so the genus drops out
    mu, r = 0.8, 0.5
    direct = sum(math.exp(-mu * (1 + r) * n * n / 2) for n in range(-30, 31))
    result = z_genus(ContinuumParams(mu=mu, r=r, genus=genus, n_c=1))
    assert result.value == pytest.approx(direct, rel=1e-9)


def test_sphere_sum_grows_with_dimension():
    sphere = z_genus(ContinuumParams(mu=1.0, genus=0, n_c=2))
    torus = z_genus(ContinuumParams(mu=1.0, genus=1, n_c=2))
    assert sphere.value > torus.value > 1.0


def test_disk_amplitude_one_color():
    theta, mu = 0.4, 1.5
    direct = sum(math.exp(-mu * n * n / 2) * np.exp(1j * n * theta) for n in range(-20, 21))
    result = gamma_disk([theta], ContinuumParams(mu=mu, n_c=1))
    assert abs(result.value - direct) < 1e-10


def test_disk_angle_count_checked():
    with pytest.raises(InvalidInput):
        gamma_disk([0.1, 0.2], ContinuumParams(mu=1.0, n_c=1))


def test_fixed_cutoff_too_small():
    with pytest.raises(TruncationError):
        z_genus(ContinuumParams(mu=0.01, n_c=1, max_abs=1))


def test_params_validation():
    with pytest.raises(InvalidInput):
        ContinuumParams(mu=0.0)
    with pytest.raises(InvalidInput):
        ContinuumParams(mu=1.0, genus=-1)
    with pytest.raises(ValueError):
        ContinuumParams(mu=1.0, kind="cubic")
    assert ContinuumParams(mu=1.0, kind="cauchy").kind is CasimirKind.CAUCHY


# ── Haar identities ───────────────────────────────────────────────────


@pytest.mark.parametrize("n_c", [1, 2])
def test_haar_quadrature_moments(n_c):
    mats, weights = haar_quadrature(n_c, 4)
    assert weights.sum() == pytest.approx(1.0)
    eye = np.eye(n_c)
    assert np.allclose(mats @ np.conj(np.swapaxes(mats, -1, -2)), eye)
    traces = np.trace(mats, axis1=-2, axis2=-1)
    assert abs(np.sum(weights * traces)) < 1e-12
    assert np.sum(weights * np.abs(traces) ** 2) == pytest.approx(1.0, rel=1e-12)


def test_haar_quadrature_budget():
    with pytest.raises(BudgetExceeded):
        haar_quadrature(3, 2)


@pytest.mark.parametrize("n_c", [1, 2])
def test_convolution_identity(n_c, rng):
    v = haar_sample(n_c, rng)
    w = haar_sample(n_c, rng)
    fund = IrrepSignature.fundamental(n_c)
    trivial = IrrepSignature.trivial(n_c)
    assert convolution_identity_error(fund, fund, v, w) < 1e-10
    assert convolution_identity_error(fund, trivial, v, w) < 1e-10
    if n_c == 2:
        adj = IrrepSignature((1, -1))
        assert convolution_identity_error(adj, adj, v, w) < 1e-10


@pytest.mark.parametrize("parts", [(1,), (2,), (1, 0), (1, -1), (2, 0)])
def test_commutator_identity(parts, rng):
    sig = IrrepSignature(parts)
    a = haar_sample(sig.n_c, rng)
    b = haar_sample(sig.n_c, rng)
    assert commutator_identity_error(sig, a, b) < 1e-10


# ── Gluing ────────────────────────────────────────────────────────────


@pytest.mark.parametrize(
    "n_c, genus, kind",
    [
        (1, 0, "quadratic"),
        (1, 1, "quadratic"),
        (1, 0, "cauchy"),
        (1, 1, "cauchy"),
        (2, 0, "quadratic"),
        (2, 1, "quadratic"),
        pytest.param(2, 0, "cauchy", marks=pytest.mark.slow),
        pytest.param(2, 1, "cauchy", marks=pytest.mark.slow),
    ],
)
def test_glued_disks_match_closed_surface(n_c, genus, kind):
    params = ContinuumParams(mu=1.0, r=0.5, genus=genus, kind=kind, n_c=n_c)
    result = glue_check(0.6, 0.9, params)
    assert result.difference < 1e-8
    assert result.surface == ("sphere" if genus == 0 else "torus")


@pytest.mark.parametrize("n_c, kind", [(1, "quadratic"), (2, "quadratic"), (2, "cauchy")])
def test_torus_double_integral_at_small_cutoff(n_c, kind):
    # every irrep contributes d * e^{-mu E} * (1 / d) once A and B are integrated out
    mu = 1.5
    params = ContinuumParams(mu=mu, r=0.5, genus=1, kind=kind, n_c=n_c)
    expected = sum(math.exp(-mu * params.energy(sig)) for sig in enumerate_signatures(n_c, 1))
    assert torus_double_integral(params, mu, 1) == pytest.approx(expected, rel=1e-10)


def test_torus_double_integral_limits():
    params = ContinuumParams(mu=1.0, genus=1, n_c=2)
    with pytest.raises(BudgetExceeded):
        torus_double_integral(params, 1.0, 2)
    with pytest.raises(BudgetExceeded):
        torus_double_integral(ContinuumParams(mu=1.0, genus=1, n_c=3), 1.0, 1)
    with pytest.raises(InvalidInput):
        torus_double_integral(params, 1.0, -1)


def test_gluing_limits():
    with pytest.raises(InvalidInput):
        glue_check(0.5, 0.5, ContinuumParams(mu=1.0, genus=2, n_c=1))
    with pytest.raises(BudgetExceeded):
        glue_check(0.5, 0.5, ContinuumParams(mu=1.0, n_c=3))
    with pytest.raises(InvalidInput):
        glue_check(0.0, 0.5, ContinuumParams(mu=1.0, n_c=1))


# ── Lattice surfaces ──────────────────────────────────────────────────


def test_lattice_torus_one_color():
    alpha = 0.5
    result = lattice_partition_closed_surface(1, [alpha] * 4, ModelCouplings(n_c=1, n_b=1))
    assert result.value == pytest.approx((1 + alpha ** 4) / (1 - alpha ** 4), rel=1e-9)
    assert result.metadata == {"genus": 1, "plaquettes": 4}


def test_lattice_groups_equal_alphas():
    mixed = lattice_partition_closed_surface(1, [0.5, 0.3, 0.5, 0.3], ModelCouplings(n_c=1, n_b=1))
    direct = 1 + 2 * sum((0.5 * 0.5 * 0.3 * 0.3) ** n for n in range(1, 40))
    assert mixed.value == pytest.approx(direct, rel=1e-9)


def test_lattice_needs_plaquettes():
    with pytest.raises(InvalidInput):
        lattice_partition_closed_surface(1, [], ModelCouplings(n_c=1, n_b=1))


def test_area_maps():
    quad = quadratic_area_map([0.01] * 4, 1.0, 2.0)
    assert quad.alphas == pytest.approx([0.9] * 4)
    assert quad.mu == pytest.approx(0.08)
    cauchy = cauchy_area_map([0.25] * 4, 1.0)
    assert cauchy.alphas == pytest.approx([0.75] * 4)
    assert cauchy.mu == pytest.approx(1.0)
    with pytest.raises(InvalidInput):
        cauchy_area_map([2.5], 1.0)
    with pytest.raises(InvalidInput):
        quadratic_area_map([-1.0], 1.0, 1.0)


def test_cauchy_refinement_converges():
    points = refinement_series("cauchy", 1, 1, 1, 1.0, plaquette_counts=(4, 16, 64))
    gaps = [p.gap for p in points]
    assert gaps[0] > gaps[1] > gaps[2]
    assert points[-1].continuum == pytest.approx(1 / math.tanh(0.5), rel=1e-9)


def test_cauchy_refinement_needs_matching_species():
    with pytest.raises(InvalidInput):
        refinement_series("cauchy", 2, 3, 1, 1.0)


@pytest.mark.slow
def test_quadratic_refinement_converges():
    points = refinement_series("quadratic", 2, 3, 1, 1.0, plaquette_counts=(4, 16, 64))
    gaps = [p.gap for p in points]
    assert gaps[0] > gaps[1] > gaps[2]
    assert [p.alpha for p in points] == sorted(p.alpha for p in points)
    assert len({p.continuum for p in points}) == 1
