from fractions import Fraction

import numpy as np
import pytest

from inducedym.errors import InvalidInput
from inducedym.repn import (
    IrrepSignature,
    casimir1,
    casimir2,
    character_at_torus,
    character_from_weights,
    character_inner_product,
    charge,
    enumerate_signatures,
    expected_weight_sum,
    parse_signature,
    signature_shell,
    weight_multiplicities,
    weyl_dimension,
)


@pytest.mark.parametrize(
    "parts, dim",
    [
        ((0,), 1),
        ((5,), 1),
        ((1, 0), 2),
        ((1, 1), 1),
        ((2, 0), 3),
        ((1, -1), 3),
        ((1, 0, 0), 3),
        ((1, 0, -1), 8),
        ((2, 0, 0), 6),
        ((2, 1, 0, 0), 20),
    ],
)
def test_weyl_dimension(parts, dim):
    assert weyl_dimension(IrrepSignature(parts)) == dim


def test_signature_must_be_nonincreasing():
    with pytest.raises(InvalidInput):
        IrrepSignature((0, 1))
    with pytest.raises(InvalidInput):
        parse_signature("1,a")


def test_parse_signature():
    assert parse_signature("(2,1,-1)") == IrrepSignature((2, 1, -1))
    assert str(IrrepSignature((1, 0))) == "(1,0)"


def test_charge_and_casimirs():
    for n in range(1, 5):
        fund = IrrepSignature.fundamental(n)
        assert charge(fund) == 1
        assert casimir2(fund) == n
        assert casimir2(IrrepSignature.trivial(n)) == 0
    assert casimir2(IrrepSignature((1, -1))) == 4
    for k in range(-3, 4):
        assert casimir1(IrrepSignature((k,))) == abs(k)
        assert casimir2(IrrepSignature((k,))) == k * k


def test_conjugate_preserves_dimension_and_casimir():
    sig = IrrepSignature((3, 1, -2))
    conj = sig.conjugate()
    assert weyl_dimension(conj) == weyl_dimension(sig)
    assert casimir2(conj) == casimir2(sig)
    assert charge(conj) == -charge(sig)


def test_enumeration_counts():
    assert len(enumerate_signatures(2, 1)) == 6
    assert all(max(abs(p) for p in s.parts) == 2 for s in signature_shell(2, 2))
    assert len(signature_shell(1, 3)) == 2


@pytest.mark.parametrize("n_c", [1, 2, 3])
def test_weight_multiplicities_sum_to_dimension(n_c):
    for sig in enumerate_signatures(n_c, 3):
        table = weight_multiplicities(sig)
        assert table.dimension == weyl_dimension(sig)
        assert table.weight_sum() == expected_weight_sum(sig)


@pytest.mark.slow
def test_weight_multiplicities_four_colors():
    for sig in enumerate_signatures(4, 3):
        table = weight_multiplicities(sig)
        assert table.dimension == weyl_dimension(sig)
        assert table.weight_sum() == expected_weight_sum(sig)


def test_weights_of_adjoint():
    table = weight_multiplicities(IrrepSignature((1, 0, -1)))
    assert table.multiplicity((0, 0, 0)) == 2
    assert table.multiplicity((1, -1, 0)) == 1
    assert table.negated().signature == IrrepSignature((1, 0, -1))


def test_cas1_of_fundamental():
    assert casimir1(IrrepSignature((1, 0))) == Fraction(1)
    # (1,-1) of U(2): weights (1,-1), (0,0), (-1,1)
    assert casimir1(IrrepSignature((1, -1))) == Fraction(4, 3)


def test_character_at_identity_is_dimension():
    for sig in enumerate_signatures(3, 2):
        assert character_at_torus(sig, np.zeros(3)) == pytest.approx(weyl_dimension(sig))


def test_weyl_ratio_matches_weight_sum(rng):
    theta = rng.uniform(0, 2 * np.pi, size=3)
    for sig in enumerate_signatures(3, 2):
        ratio = character_at_torus(sig, theta)
        direct = character_from_weights(sig, theta[None])[0]
        assert ratio == pytest.approx(direct, abs=1e-9)


def test_character_near_degenerate_angles():
    sig = IrrepSignature((2, 0))
    theta = np.array([0.3, 0.3 + 1e-9])
    expected = character_from_weights(sig, theta[None])[0]
    assert character_at_torus(sig, theta) == pytest.approx(expected, abs=1e-9)


def test_character_angle_count_checked():
    with pytest.raises(InvalidInput):
        character_at_torus(IrrepSignature((1, 0)), np.zeros(3))


@pytest.mark.parametrize("n_c", [1, 2])
def test_character_orthonormality(n_c):
    sigs = enumerate_signatures(n_c, 2)
    for lam in sigs:
        for mu in sigs:
            value = character_inner_product(lam, mu, m=16)
            assert abs(value - (1.0 if lam == mu else 0.0)) < 1e-8
