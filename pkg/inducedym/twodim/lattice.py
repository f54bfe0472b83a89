"""Lattice partition functions on closed surfaces and their continuum refinement."""

import math
from collections import Counter
from dataclasses import dataclass

import mpmath

from ..config import Config
from ..errors import InvalidInput
from ..logging import get_logger
from ..repn import IrrepSignature, weyl_dimension
from ..weights import ModelCouplings, coefficient_ratio, moments_B1B2
from .continuum import CasimirKind, ContinuumParams, SeriesValue, shell_series, z_genus

logger = get_logger(__name__)


def lattice_partition_closed_surface(
    genus: int,
    alphas: list[float],
    couplings: ModelCouplings,
    max_abs: int | None = None,
    tolerance: float | None = None,
) -> SeriesValue:
    """
    Lattice partition function of a closed genus-g surface after all inner
    link integrations,

        Z = sum_lambda d_lambda^{2-2g} prod_p c_lambda(alpha_p) / (d_lambda c_0(alpha_p)),

    normalized by c_0 per plaquette. Plaquettes with equal alpha share one
    coefficient evaluation.

    Args:
        genus: Surface genus
        alphas: Per-plaquette bosonic couplings (|alpha_p| < 1)
        couplings: Species and color counts; alpha_b is replaced per plaquette
        max_abs: Fixed shell cutoff, or None to grow until the tail fits
        tolerance: Tail tolerance (default Config.TAIL_TOLERANCE)
    """
    if genus < 0:
        raise InvalidInput("genus must be non-negative", module="twodim")
    if not alphas:
        raise InvalidInput("a closed surface needs at least one plaquette", module="twodim")
    groups = Counter(alphas)
    per_alpha = {a: couplings.with_alpha_b(a) for a in groups}
    power = 2 - 2 * genus
    tol = Config.TAIL_TOLERANCE if tolerance is None else tolerance

    def term(sig: IrrepSignature) -> tuple[float, float]:
        with mpmath.workdps(Config.PRECISION):
            product = mpmath.mpf(1)
            for alpha, count in groups.items():
                product *= coefficient_ratio(sig, per_alpha[alpha]) ** count
            value = float(weyl_dimension(sig) ** power * product)
        return value, abs(value)

    result = shell_series(
        couplings.n_c, term, max_abs, tol, f"lattice Z_{genus} ({len(alphas)} plaquettes)"
    )
    result.value = float(result.value)
    result.metadata = {"genus": genus, "plaquettes": len(alphas)}
    return result


# ── Area maps ─────────────────────────────────────────────────────────


@dataclass
class AreaMap:
    """Per-plaquette couplings for given plaquette areas, with the continuum area they produce."""
    alphas: list[float]
    mu: float
    kind: CasimirKind


def quadratic_area_map(areas: list[float], a: float, b2: float) -> AreaMap:
    """alpha_p = 1 - sqrt(A_p) / a; continuum area mu = B2 sum A_p / a^2."""
    if a <= 0 or any(x <= 0 for x in areas):
        raise InvalidInput("areas and the length scale must be positive", module="twodim")
    alphas = [1.0 - math.sqrt(x) / a for x in areas]
    if any(not abs(al) < 1 for al in alphas):
        raise InvalidInput("plaquette area too large for the length scale", module="twodim")
    return AreaMap(alphas=alphas, mu=b2 * sum(areas) / a ** 2, kind=CasimirKind.QUADRATIC)


def cauchy_area_map(areas: list[float], a: float) -> AreaMap:
    """alpha_p = 1 - A_p / a^2; continuum area mu = sum A_p / a^2."""
    if a <= 0 or any(x <= 0 for x in areas):
        raise InvalidInput("areas and the length scale must be positive", module="twodim")
    alphas = [1.0 - x / a ** 2 for x in areas]
    if any(not abs(al) < 1 for al in alphas):
        raise InvalidInput("plaquette area too large for the length scale", module="twodim")
    return AreaMap(alphas=alphas, mu=sum(areas) / a ** 2, kind=CasimirKind.CAUCHY)


@dataclass
class RefinementPoint:
    plaquettes: int
    alpha: float
    lattice: float
    continuum: float

    @property
    def gap(self) -> float:
        return abs(self.lattice - self.continuum)

    def to_dict(self) -> dict:
        return {
            "plaquettes": self.plaquettes,
            "alpha": self.alpha,
            "lattice": self.lattice,
            "continuum": self.continuum,
            "gap": self.gap,
        }


def refinement_series(
    kind: CasimirKind | str,
    n_c: int,
    n_b: int,
    genus: int,
    mu: float,
    plaquette_counts: tuple[int, ...] = (4, 16, 64),
    tolerance: float | None = None,
) -> list[RefinementPoint]:
    """
    Compare the lattice partition function of K equal-area plaquettes with
    the continuum Z_g at fixed total area, for each K.

    Quadratic regime (N_b >= N_c + 1): B1, B2 come from moments_B1B2 and
    the continuum sum uses r = B1/B2. Cauchy regime (N_b = N_c): the
    continuum sum uses Cas1.
    """
    kind = CasimirKind(kind)
    couplings = ModelCouplings(n_c=n_c, n_b=n_b)
    if kind is CasimirKind.QUADRATIC:
        report = moments_B1B2(n_b, n_c)
        r = report.b1 / report.b2
        b2 = report.b2
    else:
        if n_b != n_c:
            raise InvalidInput("the Cauchy regime requires N_b = N_c", module="twodim")
        r, b2 = 0.0, 1.0
    continuum = z_genus(
        ContinuumParams(mu=mu, r=r, genus=genus, kind=kind, n_c=n_c, tolerance=tolerance)
    )

    points = []
    for k in plaquette_counts:
        # unit length scale; each plaquette carries area mu / (b2 K)
        if kind is CasimirKind.QUADRATIC:
            amap = quadratic_area_map([mu / (b2 * k)] * k, 1.0, b2)
        else:
            amap = cauchy_area_map([mu / k] * k, 1.0)
        lattice = lattice_partition_closed_surface(genus, amap.alphas, couplings, tolerance=tolerance)
        point = RefinementPoint(
            plaquettes=k,
            alpha=amap.alphas[0],
            lattice=float(lattice.value),
            continuum=float(continuum.value),
        )
        logger.info("refinement K=%d alpha=%.6g: lattice=%.10g continuum=%.10g", k, point.alpha, point.lattice, point.continuum)
        points.append(point)
    return points
