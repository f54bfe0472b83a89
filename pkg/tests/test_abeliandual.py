import numpy as np
import pytest

from inducedym.abeliandual import DualWeightConfig, direct_u1_oracle, dual_partition, dual_wilson
from inducedym.cellcomplex import (
    Contour,
    build_closed_surface,
    build_hypercubic,
    build_polygon,
    spanning_tree,
)
from inducedym.errors import BudgetExceeded, HomologyObstruction, InvalidInput
from inducedym.twodim import lattice_partition_closed_surface
from inducedym.weights import ModelCouplings

ORACLE_COMPLEXES = [
    ((1, 1), False),
    ((2, 1), False),
    ((2, 2), True),
    ((2, 2), False),
    ((3, 1), False),
    ((1, 1, 1), False),
]


def _torus_z(alpha: float) -> float:
    return (1 - alpha ** 2) ** -4 * (1 + alpha ** 4) / (1 - alpha ** 4)


# ── Dual sums ─────────────────────────────────────────────────────────


def test_single_plaquette(plaquette):
    result = dual_partition(plaquette, DualWeightConfig.uniform(plaquette, 0.5))
    assert result.value == pytest.approx(4 / 3, rel=1e-12)
    assert result.rank == 0
    assert result.tail_bound == 0.0


def test_open_complexes_give_the_prefactor():
    cx = build_hypercubic((3, 3), False)
    result = dual_partition(cx, DualWeightConfig.uniform(cx, 0.3))
    assert result.value == pytest.approx((1 - 0.09) ** -9, rel=1e-12)


def test_torus_with_fixed_cutoff(torus2x2):
    alpha = 0.5
    result = dual_partition(torus2x2, DualWeightConfig.uniform(torus2x2, alpha, n_max=8))
    assert result.chain_count == 5
    expected = (1 - alpha ** 2) ** -4 * (1 + 2 * alpha ** 4 + 2 * alpha ** 8)
    assert result.value == pytest.approx(expected, rel=1e-12)
    assert result.tail_bound > 0


def test_torus_with_automatic_cutoff(torus2x2):
    result = dual_partition(torus2x2, DualWeightConfig.uniform(torus2x2, 0.5))
    assert result.value == pytest.approx(_torus_z(0.5), rel=1e-8)
    assert result.tail_bound <= 1e-8 * result.value


def test_cube_surface():
    cx = build_hypercubic((1, 1, 1), False)
    alpha = 0.4
    result = dual_partition(cx, DualWeightConfig.uniform(cx, alpha))
    expected = (1 - alpha ** 2) ** -6 * (1 + alpha ** 6) / (1 - alpha ** 6)
    assert result.value == pytest.approx(expected, rel=1e-8)


def test_dual_matches_lattice_character_sum(torus2x2):
    alpha = 0.5
    dual = dual_partition(torus2x2, DualWeightConfig.uniform(torus2x2, alpha))
    lattice = lattice_partition_closed_surface(1, [alpha] * 4, ModelCouplings(n_c=1, n_b=1))
    assert dual.value == pytest.approx((1 - alpha ** 2) ** -4 * lattice.value, rel=1e-8)


def test_config_validation(plaquette):
    with pytest.raises(InvalidInput):
        DualWeightConfig([1.0])
    with pytest.raises(InvalidInput):
        DualWeightConfig([0.5], n_max=-1)
    with pytest.raises(InvalidInput):
        dual_partition(plaquette, DualWeightConfig([0.5, 0.5]))


# ── Wilson loops ──────────────────────────────────────────────────────


def test_plaquette_wilson_loop(plaquette):
    contour = Contour.plaquette_boundary(plaquette, 0)
    result = dual_wilson(plaquette, contour, DualWeightConfig.uniform(plaquette, 0.5))
    assert result.value == pytest.approx(0.5, rel=1e-12)


def test_area_law_on_open_pair():
    cx = build_hypercubic((2, 1), False)
    config = DualWeightConfig.uniform(cx, 0.3)
    for p in range(cx.n_plaquettes):
        result = dual_wilson(cx, Contour.plaquette_boundary(cx, p), config)
        assert result.value == pytest.approx(0.3, rel=1e-12)


def test_empty_contour_has_unit_expectation(torus2x2):
    result = dual_wilson(torus2x2, Contour(()), DualWeightConfig.uniform(torus2x2, 0.5))
    assert result.value == 1.0


def test_noncontractible_loop(torus2x2):
    loop = Contour.from_steps(torus2x2, [(0, 1), (4, 1)])
    with pytest.raises(HomologyObstruction):
        dual_wilson(torus2x2, loop, DualWeightConfig.uniform(torus2x2, 0.5))


# ── Gauge-fixed oracle ────────────────────────────────────────────────


@pytest.mark.parametrize("extents, periodic", ORACLE_COMPLEXES)
def test_oracle_matches_dual(extents, periodic):
    cx = build_hypercubic(extents, periodic)
    config = DualWeightConfig.uniform(cx, 0.3)
    oracle = direct_u1_oracle(cx, config, grid=32)
    dual = dual_partition(cx, config)
    assert oracle.z == pytest.approx(dual.value, rel=1e-6)


@pytest.mark.parametrize("extents, periodic", ORACLE_COMPLEXES)
def test_oracle_wilson_matches_dual(extents, periodic):
    cx = build_hypercubic(extents, periodic)
    config = DualWeightConfig.uniform(cx, 0.3)
    contour = Contour.plaquette_boundary(cx, 0)
    oracle = direct_u1_oracle(cx, config, grid=32, contour=contour)
    dual = dual_wilson(cx, contour, config)
    assert oracle.wilson == pytest.approx(dual.value, rel=1e-6)


def test_oracle_with_mixed_couplings(torus2x2):
    config = DualWeightConfig([0.1, 0.2, 0.3, 0.25])
    oracle = direct_u1_oracle(torus2x2, config, grid=32)
    dual = dual_partition(torus2x2, config)
    assert oracle.z == pytest.approx(dual.value, rel=1e-6)


def test_oracle_limits(plaquette):
    config = DualWeightConfig.uniform(plaquette, 0.3)
    with pytest.raises(InvalidInput):
        direct_u1_oracle(plaquette, config, grid=7)
    big = build_hypercubic((4, 4), True)
    with pytest.raises(BudgetExceeded):
        direct_u1_oracle(big, DualWeightConfig.uniform(big, 0.3))


def test_oracle_rejects_more_than_six_free_links():
    cx = build_hypercubic((3, 3), False)
    assert cx.n_links - len(spanning_tree(cx)) == 9
    with pytest.raises(BudgetExceeded):
        direct_u1_oracle(cx, DualWeightConfig.uniform(cx, 0.3))


# ── Gauge fixing ──────────────────────────────────────────────────────


def _unfixed_quadrature(cx, alphas, m, contour=None) -> complex:
    """Trapezoid average over every link angle, no gauge fixing."""
    theta = 2 * np.pi * np.arange(m) / m
    grids = np.meshgrid(*([theta] * cx.n_links), indexing="ij")
    integrand = np.ones_like(grids[0], dtype=complex)
    for alpha, walk in zip(alphas, cx.plaquettes):
        holonomy = sum(s * grids[l] for l, s in walk)
        integrand = integrand / (1 - 2 * alpha * np.cos(holonomy) + alpha ** 2)
    if contour is not None:
        integrand = integrand * np.exp(1j * sum(s * grids[l] for l, s in contour.steps))
    return complex(integrand.mean())


@pytest.mark.parametrize("cx", [build_polygon(2), build_hypercubic((1, 1))])
def test_gauge_fixing_leaves_integrals_unchanged(cx):
    m = 32
    alphas = [0.3] * cx.n_plaquettes
    contour = Contour.plaquette_boundary(cx, 0)
    full_z = _unfixed_quadrature(cx, alphas, m)
    full_loop = _unfixed_quadrature(cx, alphas, m, contour)
    fixed = direct_u1_oracle(cx, DualWeightConfig(alphas), grid=m, contour=contour)
    assert fixed.free_links < cx.n_links
    assert fixed.z == pytest.approx(full_z.real, rel=1e-8)
    assert abs(full_z.imag) < 1e-12
    assert fixed.wilson == pytest.approx(full_loop.real / full_z.real, rel=1e-8)


# ── Random small complexes ────────────────────────────────────────────

SMALL_COMPLEXES = [
    lambda: build_hypercubic((1, 1), False),
    lambda: build_hypercubic((2, 1), False),
    lambda: build_hypercubic((1, 3), False),
    lambda: build_hypercubic((2, 2), False),
    lambda: build_hypercubic((4, 1), False),
    lambda: build_hypercubic((1, 1), True),
    lambda: build_hypercubic((2, 1), True),
    lambda: build_hypercubic((2, 1), (True, False)),
    lambda: build_hypercubic((2, 2), True),
    lambda: build_hypercubic((1, 1, 1), False),
    lambda: build_polygon(1),
    lambda: build_polygon(3),
    lambda: build_closed_surface(0),
    lambda: build_closed_surface(1),
    lambda: build_closed_surface(2),
]


@pytest.mark.parametrize("seed", range(12))
def test_oracle_matches_dual_on_random_complexes(seed):
    rng = np.random.default_rng(seed)
    cx = SMALL_COMPLEXES[rng.integers(len(SMALL_COMPLEXES))]()
    assert cx.n_links - len(spanning_tree(cx)) <= 6
    config = DualWeightConfig(list(rng.uniform(0.05, 0.3, cx.n_plaquettes)))
    oracle = direct_u1_oracle(cx, config, grid=32)
    dual = dual_partition(cx, config)
    assert oracle.z == pytest.approx(dual.value, rel=1e-6)


def test_partition_grows_with_each_alpha(torus2x2):
    base = [0.2, 0.3, 0.25, 0.35]
    z0 = dual_partition(torus2x2, DualWeightConfig(base)).value
    for p in range(4):
        bumped = list(base)
        bumped[p] += 0.05
        assert dual_partition(torus2x2, DualWeightConfig(bumped)).value > z0


@pytest.mark.parametrize("n_max", [2, 4, 6])
def test_tail_bound_covers_next_cutoff(torus2x2, n_max):
    coarse = dual_partition(torus2x2, DualWeightConfig.uniform(torus2x2, 0.6, n_max=n_max))
    fine = dual_partition(torus2x2, DualWeightConfig.uniform(torus2x2, 0.6, n_max=n_max + 2))
    assert abs(fine.value - coarse.value) <= coarse.tail_bound
