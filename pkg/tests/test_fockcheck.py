import math

import numpy as np
import pytest

from inducedym.errors import BudgetExceeded, InvalidInput
from inducedym.fockcheck import (
    OneParticleMatrix,
    fock_determinant,
    hilbert_exponent,
    singlet_hilbert_series,
    singlet_series_exact,
    symmetric_power_traces,
    truncated_fock_trace,
    verify_det_identity,
)
from inducedym.fockcheck.trace import tail_bound
from inducedym.montecarlo import haar_sample
from inducedym.repn import IrrepSignature
from inducedym.weights import ModelCouplings, char_coefficient


# ── Truncated traces ──────────────────────────────────────────────────


def test_symmetric_powers_of_identity():
    h = symmetric_power_traces(np.full(5, 3.0), 5)
    assert np.allclose(h.real, [1, 3, 6, 10, 15, 21])


def test_one_particle_matrix():
    u = np.diag([1j, -1.0])
    one = OneParticleMatrix(u, 2)
    assert one.dimension == 8
    assert sorted(np.round(one.eigenvalues(), 12), key=lambda z: (z.real, z.imag)) == sorted(
        [1j, 1j, -1j, -1j, -1, -1, -1, -1], key=lambda z: (z.real, z.imag)
    )
    with pytest.raises(InvalidInput):
        OneParticleMatrix(np.ones((2, 3)), 1)
    with pytest.raises(InvalidInput):
        OneParticleMatrix(u, 0)


def test_identity_at_minus_one():
    u = np.array([[-1.0 + 0j]])
    check = verify_det_identity(u, 0.5, 1, 40)
    assert check.determinant == pytest.approx(1 / 1.5 ** 2)
    assert check.relative_error < 1e-8


@pytest.mark.parametrize("n_c, n_b", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)])
def test_identity_for_haar_matrices(n_c, n_b, rng):
    for alpha in (0.1, 0.3):
        u = haar_sample(n_c, rng)
        check = verify_det_identity(u, alpha, n_b, 40)
        assert check.relative_error < 1e-6
        assert abs(check.trace.imag) < 1e-10
        assert check.relative_error <= check.bound + 1e-10


def test_truncation_arguments():
    u = np.eye(2)
    assert truncated_fock_trace(u, 0.5, 1, 0) == 1
    with pytest.raises(InvalidInput):
        truncated_fock_trace(u, 1.0, 1, 10)
    with pytest.raises(InvalidInput):
        truncated_fock_trace(u, 0.5, 1, -1)


def test_tail_bound_decreases_with_cutoff():
    assert tail_bound(0.0, 4, 10) == 0.0
    assert tail_bound(0.3, 4, 20) < tail_bound(0.3, 4, 10)
    # full geometric sum for D = 1
    assert tail_bound(0.5, 1, 0) == pytest.approx(1.0)


def test_determinant_of_identity():
    assert fock_determinant(np.eye(2), 0.5, 1) == pytest.approx(16.0)


# ── Invariant dimensions ──────────────────────────────────────────────


def test_hilbert_series_one_color():
    series = singlet_hilbert_series(1, 1, 10)
    assert series.dims == [1, 0] * 5 + [1]


def test_hilbert_series_two_colors():
    series = singlet_hilbert_series(2, 2, 20)
    assert series.dims[1::2] == [0] * 10
    assert series.dims[0::2] == [math.comb(m + 3, 3) for m in range(11)]


@pytest.mark.parametrize("n_c, n_b", [(1, 2), (2, 1), (2, 3), (3, 3)])
def test_exact_series_matches_quadrature(n_c, n_b):
    exact = singlet_series_exact(n_c, n_b, 12)
    if n_c <= 2:
        assert singlet_hilbert_series(n_c, n_b, 12).dims == exact.dims
    assert exact.dims[0] == 1


def test_series_sums_to_trivial_coefficient():
    series = singlet_series_exact(2, 2, 40)
    c0 = float(char_coefficient(IrrepSignature.trivial(2), ModelCouplings(n_c=2, n_b=2, alpha_b=0.3)).value)
    assert series.partial_sum(0.3) == pytest.approx(c0, rel=1e-10)


def test_hilbert_budgets():
    with pytest.raises(BudgetExceeded):
        singlet_hilbert_series(3, 1, 4)
    with pytest.raises(BudgetExceeded):
        singlet_hilbert_series(1, 1, 41)
    with pytest.raises(BudgetExceeded):
        singlet_series_exact(4, 1, 4)
    with pytest.raises(InvalidInput):
        singlet_series_exact(1, 0, 4)


def test_hilbert_exponent_one_color():
    assert hilbert_exponent(1, 1).relative_error < 0.1


@pytest.mark.slow
def test_hilbert_exponent_two_colors():
    assert hilbert_exponent(2, 2).relative_error < 0.1
