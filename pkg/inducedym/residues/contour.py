"""
Torus integrals of the pure bosonic or pure fermionic weight by residues.

On the unit torus |Delta(z)|^2 = (-1)^{N(N-1)/2} Delta(z)^2 prod_j z_j^{-(N-1)}
and dtheta = dz / (i z), so

    <z^n> = (2 pi)^N (-1)^{N(N-1)/2} sum_{poles} Res prod_j h_j(z_j) Delta(z)^2

with one-variable factors

    boson:    h_j = z^{n_j + N_b - N} (z - alpha)^{-N_b} (1 - alpha z)^{-N_b}
    fermion:  h_j = z^{n_j - N - N_f} (z - alpha)^{N_f} (1 - alpha z)^{N_f}

Poles sit at fixed points independent of the other variables, so the
iterated residue is a sum over pole assignments a. Expanding
Delta(z)^2 = sum_beta p_beta (z - a)^beta, each assignment contributes
sum_beta p_beta prod_j L_j(a_j, beta_j), where L_j(a, b) is the coefficient
of (z - a)^{-1-b} in the Laurent expansion of h_j at a.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import mpmath

from ..config import Config
from ..errors import BudgetExceeded, InvalidInput, MixedWeightError
from ..logging import get_logger
from ..repn import IrrepSignature, weight_multiplicities
from ..weights.couplings import ModelCouplings
from ..weights.fourier import to_mpf
from .jets import TaylorJet

logger = get_logger(__name__)

STRATEGIES = ("auto", "inside", "outside")


@dataclass(frozen=True)
class Pole:
    """A pole of a one-variable factor: h(z) = (z - point)^{-order} g(z), g analytic there."""
    point: object
    order: int
    analytic_part: tuple
    sign: int = 1  # -1 for poles outside the unit circle


@dataclass
class TorusMoment:
    """Unnormalized torus integral <z^n>, stored as reduced = value / (2 pi)^N."""
    exponents: tuple[int, ...]
    reduced: object

    @property
    def n_c(self) -> int:
        return len(self.exponents)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.reduced, (int, Fraction))

    @property
    def value(self) -> mpmath.mpf:
        with mpmath.workdps(Config.PRECISION):
            return (2 * mpmath.pi) ** self.n_c * to_mpf(self.reduced)

    def to_dict(self) -> dict:
        return {
            "exponents": list(self.exponents),
            "reduced": str(self.reduced),
            "value": float(self.value),
            "exact": self.is_exact,
        }


# ── Field handling ────────────────────────────────────────────────────


def _field_value(x, exact: bool):
    if exact:
        return Fraction(x)
    return to_mpf(x)


def _check_couplings(couplings: ModelCouplings) -> tuple[str, int, object]:
    """Return (kind, species, alpha) for a pure weight or raise."""
    if couplings.is_wilson:
        raise MixedWeightError(
            "the Wilson weight is not rational; use the determinant engine", module="residues"
        )
    if couplings.n_b and couplings.n_f:
        raise MixedWeightError(
            "residue engine handles pure bosonic or pure fermionic weights only; "
            "use the quadrature engine for the mixed weight",
            module="residues",
        )
    if couplings.n_c > Config.RESIDUE_MAX_NC:
        raise BudgetExceeded(
            f"N_c={couplings.n_c} above residue budget {Config.RESIDUE_MAX_NC}", module="residues"
        )
    species = max(couplings.n_b, couplings.n_f)
    if species > Config.RESIDUE_MAX_SPECIES:
        raise BudgetExceeded(
            f"species count {species} above residue budget {Config.RESIDUE_MAX_SPECIES}",
            module="residues",
        )
    if couplings.n_f:
        return "fermion", couplings.n_f, couplings.alpha_f
    return "boson", couplings.n_b, couplings.alpha_b


def _analytic_jet(order: int, base, factors: list[tuple[object, object, int]], prefactor):
    """Univariate jet of prefactor * prod (c + s z)^p around z = base, to order-1.

    Each factor is (c, s, p) meaning (c + s z)^p.
    """
    orders = (max(order - 1, 0),)
    z = TaylorJet.variable(orders, 0, base)
    jet = TaylorJet.constant(orders, prefactor)
    for c, s, p in factors:
        if p:
            jet = jet * (z * s + c) ** p
    return tuple(jet.coefficient((k,)) for k in range(orders[0] + 1))


def _variable_poles(exponent: int, kind: str, species: int, alpha, exact: bool, outside: bool) -> list[Pole]:
    """Poles of h(z) = z^exponent (z - alpha)^{+-N} (1 - alpha z)^{+-N} to sum for one variable."""
    one = _field_value(1, exact)
    zero = _field_value(0, exact)
    p = -species if kind == "boson" else species
    if alpha == 0 or species == 0:
        # h collapses to z^{exponent + p}
        folded = exponent + p
        if folded >= 0:
            return []
        return [Pole(point=zero, order=-folded, analytic_part=_analytic_jet(-folded, zero, [], one))]

    # h = z^e (z - alpha)^p (1 - alpha z)^p
    lin_a = (-alpha, one, p)       # (z - alpha)^p
    lin_b = (one, -alpha, p)       # (1 - alpha z)^p

    if kind == "fermion":
        if exponent >= 0:
            return []
        return [Pole(zero, -exponent, _analytic_jet(-exponent, zero, [lin_a, lin_b], one))]

    if outside:
        # (1 - alpha z)^{-N} = (-alpha)^{-N} (z - 1/alpha)^{-N}; contour reversal flips the sign
        inv = one / alpha
        pref = (-alpha) ** p
        factors = [lin_a, (zero, one, exponent)]
        return [Pole(inv, species, _analytic_jet(species, inv, factors, pref), sign=-1)]

    poles = []
    if exponent < 0:
        poles.append(Pole(zero, -exponent, _analytic_jet(-exponent, zero, [lin_a, lin_b], one)))
    poles.append(Pole(alpha, species, _analytic_jet(species, alpha, [(zero, one, exponent), lin_b], one)))
    return poles


def _vandermonde_sq_jet(points: tuple, orders: tuple[int, ...], one) -> TaylorJet:
    """Taylor jet of Delta(z)^2 around z = points, truncated at orders."""
    n = len(points)
    zs = [TaylorJet.variable(orders, j, points[j]) for j in range(n)]
    jet = TaylorJet.constant(orders, one)
    for k, l in combinations(range(n), 2):
        diff = zs[k] - zs[l]
        jet = jet * diff * diff
    return jet


def _use_outside(exponent: int, n_c: int, species: int, strategy: str) -> bool:
    """Whether this boson variable is evaluated at the outside pole.

    Reversal is only valid when the integrand decays like z^-2 at infinity:
    exponent - 2 N_b + 2 (N_c - 1) <= -2.
    """
    decays = exponent - 2 * species + 2 * (n_c - 1) <= -2
    if strategy == "inside" or not decays:
        return False
    if strategy == "outside":
        return True
    return exponent < 0


def torus_monomial_expectation(
    n: tuple[int, ...],
    couplings: ModelCouplings,
    strategy: str = "auto",
) -> TorusMoment:
    """
    Unnormalized torus integral of z_1^{n_1} ... z_N^{n_N} against the
    one-plaquette weight and |Delta|^2, by exact residue calculus.

    With rational alpha the result is an exact Fraction; otherwise it is
    an mpmath value at Config.PRECISION digits.

    Args:
        n: Exponent tuple, one entry per color
        couplings: Pure bosonic or pure fermionic couplings
        strategy: "auto" picks the cheaper pole per variable, "inside"
            always uses poles in the unit disk, "outside" reverses the
            contour wherever the decay condition permits

    Raises:
        MixedWeightError: for mixed or Wilson weights
        BudgetExceeded: above the N_c, species or pole-order caps
    """
    if strategy not in STRATEGIES:
        raise InvalidInput(f"unknown strategy '{strategy}'", module="residues")
    n = tuple(int(x) for x in n)
    n_c = couplings.n_c
    if len(n) != n_c:
        raise InvalidInput(f"expected {n_c} exponents, got {len(n)}", module="residues")
    kind, species, alpha = _check_couplings(couplings)
    exact = couplings.is_exact

    with mpmath.workdps(Config.PRECISION):
        a = _field_value(alpha, exact)
        one = _field_value(1, exact)
        per_variable = []
        for nj in n:
            if kind == "boson":
                e = nj + species - n_c
            else:
                e = nj - n_c - species
            outside = kind == "boson" and a != 0 and _use_outside(e, n_c, species, strategy)
            poles = _variable_poles(e, kind, species, a, exact, outside)
            for pole in poles:
                if pole.order > Config.RESIDUE_MAX_ORDER:
                    raise BudgetExceeded(
                        f"pole order {pole.order} above residue budget {Config.RESIDUE_MAX_ORDER}",
                        module="residues",
                    )
            per_variable.append(poles)

        total = _field_value(0, exact)
        for assignment in product(*per_variable):
            orders = tuple(p.order - 1 for p in assignment)
            points = tuple(p.point for p in assignment)
            vdm = _vandermonde_sq_jet(points, orders, one)
            contribution = _field_value(0, exact)
            for beta, p_beta in vdm.items():
                term = p_beta
                for j, pole in enumerate(assignment):
                    # coefficient of (z-a)^{-1-beta_j} in h_j is g_{order-1-beta_j}
                    term = term * pole.analytic_part[pole.order - 1 - beta[j]]
                contribution += term
            sign = math.prod(p.sign for p in assignment)
            total += sign * contribution

        if (n_c * (n_c - 1) // 2) % 2:
            total = -total
        logger.debug(
            "<z^%s> %s N=%d alpha=%s strategy=%s: %d pole assignments",
            n, kind, species, alpha, strategy, math.prod(len(p) for p in per_variable),
        )
        return TorusMoment(exponents=n, reduced=total if exact else +total)


def wilson_exact(couplings: ModelCouplings) -> object:
    """
    W = N_c <z_1> / <1> by residues; exact Fraction for rational alpha.

    Which poles carry the answer depends on N_b against N_c: for N_b > N_c
    only z = alpha contributes, for N_b = N_c the poles at alpha are
    simple in the normalization, for N_b < N_c the pole at zero survives.
    """
    n_c = couplings.n_c
    unit = (1,) + (0,) * (n_c - 1)
    num = torus_monomial_expectation(unit, couplings).reduced
    den = torus_monomial_expectation((0,) * n_c, couplings).reduced
    with mpmath.workdps(Config.PRECISION):
        return n_c * num / den


def char_coefficient_oracle(sig: IrrepSignature, couplings: ModelCouplings) -> object:
    """
    c_lambda = (1/N!) sum over weights mu of chi_lambda of mult(mu) <z^{-mu}> / (2 pi)^N.

    chi_lambda(U^-1) contributes the negated weight table. Exact Fraction
    for rational alpha.
    """
    if sig.n_c != couplings.n_c:
        raise InvalidInput(f"signature {sig} does not match N_c={couplings.n_c}", module="residues")
    table = weight_multiplicities(sig)
    exact = couplings.is_exact
    with mpmath.workdps(Config.PRECISION):
        total = _field_value(0, exact)
        for weight, mult in table.items():
            neg = tuple(-w for w in weight)
            total += mult * torus_monomial_expectation(neg, couplings).reduced
        if exact:
            return total / math.factorial(sig.n_c)
        return +(total / math.factorial(sig.n_c))
