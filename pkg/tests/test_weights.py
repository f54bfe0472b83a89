from fractions import Fraction

import mpmath
import numpy as np
import pytest
from scipy.special import iv

from inducedym.errors import DivergentMoments, InvalidInput, TruncationError
from inducedym.repn import IrrepSignature, casimir2, charge, enumerate_signatures
from inducedym.weights import (
    ModelCouplings,
    bosonic_fourier,
    bosonic_fourier_hypergeometric,
    cauchy_slope,
    char_coefficient,
    char_coefficient_quadrature,
    delta_limit_deviation,
    expected_exponent,
    fermionic_fourier,
    heat_kernel_weight,
    moments_B1B2,
    parse_number,
    richardson,
    singularity_exponent,
    taylor_coefficient,
    taylor_law_prediction,
    wilson_equivalent_beta,
    wilson_loop_one_plaquette,
)


# ── Couplings ─────────────────────────────────────────────────────────


def test_parse_number():
    assert parse_number("1/2") == Fraction(1, 2)
    assert isinstance(parse_number("0.25"), float)
    assert parse_number("3") == 3
    with pytest.raises(InvalidInput):
        parse_number("half")


def test_couplings_validation():
    with pytest.raises(InvalidInput):
        ModelCouplings(n_c=1, n_b=1, alpha_b=1)
    with pytest.raises(InvalidInput):
        ModelCouplings(n_c=0, n_b=1, alpha_b=0.5)
    with pytest.raises(InvalidInput):
        ModelCouplings(n_c=2, n_b=1, alpha_b=0.5, beta=1.0)
    assert ModelCouplings(n_c=2, n_b=1, alpha_b="1/3").is_exact


def test_couplings_from_masses():
    couplings = ModelCouplings.from_masses(2, 1, 0, m_b=2.0, m_f=None)
    assert couplings.alpha_b == pytest.approx(1 / 16)
    assert couplings.alpha_f == 0


def test_wilson_equivalent_beta():
    assert wilson_equivalent_beta(ModelCouplings(n_c=2, n_b=1, alpha_b=0.1)) == pytest.approx(0.4)
    assert wilson_equivalent_beta(ModelCouplings.wilson(3, 5.5)) == 5.5


# ── Fourier coefficients ──────────────────────────────────────────────


@pytest.mark.parametrize("m", [0, 1, 3, -4])
@pytest.mark.parametrize("n_b", [1, 2, 4])
def test_bosonic_series_matches_hypergeometric(m, n_b):
    series = bosonic_fourier(m, n_b, 0.6)
    closed = bosonic_fourier_hypergeometric(m, n_b, 0.6)
    assert mpmath.almosteq(series, closed, rel_eps=1e-14)


def test_fermionic_coefficients_are_exact():
    alpha = Fraction(1, 2)
    assert fermionic_fourier(0, 1, alpha) == Fraction(5, 4)
    assert fermionic_fourier(1, 1, alpha) == Fraction(-1, 2)
    assert fermionic_fourier(2, 1, alpha) == 0


# ── Character coefficients ────────────────────────────────────────────


@pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75])
@pytest.mark.parametrize(
    "n_c, n_b", [(n_c, n_b) for n_c in range(1, 5) for n_b in range(1, n_c + 1)]
)
def test_linear_law_below_threshold(n_c, n_b, alpha):
    # W = N_b alpha holds exactly for N_b <= N_c
    w = float(wilson_loop_one_plaquette(ModelCouplings(n_c=n_c, n_b=n_b, alpha_b=alpha)))
    assert w == pytest.approx(n_b * alpha, rel=1e-10)


def test_wilson_weight_gives_bessel_ratio():
    w = float(wilson_loop_one_plaquette(ModelCouplings.wilson(1, 2.0)))
    assert w == pytest.approx(iv(1, 2.0) / iv(0, 2.0), rel=1e-12)


def test_representation_missing_from_single_boson():
    c = char_coefficient(IrrepSignature((1, 1)), ModelCouplings(n_c=2, n_b=1, alpha_b=0.5))
    assert abs(float(c.value)) < 1e-12


def test_signature_must_match_colors():
    with pytest.raises(InvalidInput):
        char_coefficient(IrrepSignature((1, 0, 0)), ModelCouplings(n_c=2, n_b=1, alpha_b=0.5))


@pytest.mark.parametrize(
    "couplings",
    [
        ModelCouplings(n_c=2, n_b=2, alpha_b=0.4),
        ModelCouplings(n_c=2, n_b=1, n_f=1, alpha_b=0.3, alpha_f=0.5),
        ModelCouplings(n_c=1, n_f=2, alpha_f=0.7),
    ],
)
def test_quadrature_agrees_with_determinant(couplings):
    for sig in enumerate_signatures(couplings.n_c, 1):
        det = float(char_coefficient(sig, couplings).value)
        quad = char_coefficient_quadrature(sig, couplings, grid=64)
        assert quad == pytest.approx(det, rel=1e-9, abs=1e-12)


# ── Second moments ────────────────────────────────────────────────────


@pytest.mark.parametrize("n_b", [3, 4, 5])
def test_moments_for_two_colors(n_b):
    report = moments_B1B2(n_b, 2)
    assert report.tr_x2 == pytest.approx(3 / (2 * n_b - 5) + 1 / (2 * n_b - 3), rel=1e-8)
    assert report.tr_x_sq == pytest.approx(3 / (2 * n_b - 5) - 1 / (2 * n_b - 3), rel=1e-8)
    assert report.ratio == pytest.approx(0.5 / (n_b - 2), rel=1e-8)


def test_moments_for_one_color():
    report = moments_B1B2(2, 1)
    assert report.b1 == 0.0
    assert report.b2 == pytest.approx(1.0, rel=1e-10)


@pytest.mark.parametrize("n_b, n_c", [(1, 1), (2, 2), (1, 3)])
def test_moments_diverge_in_cauchy_regime(n_b, n_c):
    with pytest.raises(DivergentMoments):
        moments_B1B2(n_b, n_c)


# ── Near-continuum asymptotics ────────────────────────────────────────


def test_richardson_removes_linear_and_quadratic_terms():
    steps = [0.1, 0.05, 0.025]
    values = [2.0 + 3 * h - 5 * h * h for h in steps]
    assert richardson(values, steps) == pytest.approx(2.0, rel=1e-12)
    with pytest.raises(InvalidInput):
        richardson([1.0], [])


@pytest.mark.parametrize("parts", [(1, 0), (1, -1), (2, 0), (1, 1)])
def test_delta_limit_deviation_is_quadratic(parts):
    sig = IrrepSignature(parts)
    alpha = 0.99
    deviation = delta_limit_deviation(sig, ModelCouplings(n_c=2, n_b=3, alpha_b=alpha))
    bound = 5 * (1 - alpha) ** 2 * (charge(sig) ** 2 / 3 + 2 * casimir2(sig) / 3)
    assert deviation < bound


def test_taylor_law_for_one_color():
    # f_n / f_0 = alpha^n (1 + n (1-alpha^2)/(1+alpha^2)) for N_b = 2
    sig = IrrepSignature((2,))
    assert taylor_coefficient(sig, 2) == pytest.approx(taylor_law_prediction(sig, 0.0, 1.0), rel=1e-3)


@pytest.mark.slow
@pytest.mark.parametrize("parts", [(1, 0), (1, -1), (2, 0), (1, 1)])
def test_taylor_law_for_two_colors(parts):
    sig = IrrepSignature(parts)
    report = moments_B1B2(3, 2)
    predicted = taylor_law_prediction(sig, report.b1, report.b2)
    assert taylor_coefficient(sig, 3) == pytest.approx(predicted, rel=0.05)


@pytest.mark.parametrize("n", [1, 2, -3])
def test_cauchy_slope_for_one_color(n):
    assert cauchy_slope(IrrepSignature((n,)), 1) == pytest.approx(abs(n), rel=1e-6)


@pytest.mark.slow
def test_cauchy_slope_matches_cas1_for_two_colors():
    from inducedym.repn import casimir1

    for sig in enumerate_signatures(2, 2):
        if sig == IrrepSignature.trivial(2):
            continue
        assert cauchy_slope(sig, 2) == pytest.approx(float(casimir1(sig)), rel=0.05)


def test_expected_exponent():
    assert expected_exponent(1, 1) == 1
    assert expected_exponent(2, 2) == 4
    assert expected_exponent(2, 3) == 8


def test_singularity_exponent_one_color():
    fit = singularity_exponent(1, 1)
    assert fit.relative_error < 0.05


@pytest.mark.slow
@pytest.mark.parametrize("n_c, n_b", [(2, 2), (2, 3)])
def test_singularity_exponent_two_colors(n_c, n_b):
    assert singularity_exponent(n_c, n_b).relative_error < 0.05


# ── Heat kernel ───────────────────────────────────────────────────────


def test_heat_kernel_for_one_color():
    theta, t = 0.7, 0.5
    direct = sum(np.exp(-n * n * t) * np.cos(n * theta) for n in range(-10, 11))
    assert heat_kernel_weight([theta], t, cutoff=100) == pytest.approx(direct, rel=1e-12)


def test_heat_kernel_charge_term():
    theta, t, r = 0.2, 0.3, 1.0
    direct = sum(np.exp(-2 * n * n * t) * np.cos(n * theta) for n in range(-7, 8))
    assert heat_kernel_weight([theta], t, cutoff=98, r=r) == pytest.approx(direct, rel=1e-10)


def test_heat_kernel_rejects_bad_input():
    with pytest.raises(InvalidInput):
        heat_kernel_weight([0.0], 0.0, cutoff=10)
    with pytest.raises(TruncationError):
        heat_kernel_weight([0.0], 0.01, cutoff=1)
