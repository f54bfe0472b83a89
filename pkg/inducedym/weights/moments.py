"""Second moments of the eigenvalue distribution Det(1 - X^2)^{-N_b} dX and B1/B2."""

import itertools
from dataclasses import asdict, dataclass

import numpy as np
from scipy.special import roots_legendre

from ..config import Config
from ..errors import BudgetExceeded, DivergentMoments, InvalidInput
from ..logging import get_logger

logger = get_logger(__name__)

MAX_MOMENT_NC = 3


@dataclass
class MomentReport:
    """Second moments on u(N_c) and the Casimir weights they determine.

    ``tr_x2`` is -E[Tr X^2] and ``tr_x_sq`` is -E[(Tr X)^2] for anti-Hermitian
    X = iH; on eigenvalues these are E[sum x_j^2] and E[(sum x_j)^2].
    """
    n_b: int
    n_c: int
    tr_x2: float
    tr_x_sq: float
    b1: float
    b2: float
    tr_x2_error: float
    tr_x_sq_error: float
    nodes: int

    @property
    def ratio(self) -> float:
        return self.b1 / self.b2

    def to_dict(self) -> dict:
        return asdict(self)


def _vandermonde_sq(x: np.ndarray) -> np.ndarray:
    n = x.shape[-1]
    out = np.ones(x.shape[:-1])
    for k, l in itertools.combinations(range(n), 2):
        out = out * (x[..., k] - x[..., l]) ** 2
    return out


def _eigenvalue_moments(n_c: int, n_b: int, nodes: int) -> tuple[float, float]:
    """(E sum x^2, E (sum x)^2) under prod (1+x_j^2)^{-N_b} Delta(x)^2.

    x = tan(u) maps the line onto (-pi/2, pi/2) with
    (1+x^2)^{-N_b} dx = cos(u)^{2 N_b - 2} du.
    """
    t, w = roots_legendre(nodes)
    u = 0.5 * np.pi * t
    w = 0.5 * np.pi * w * np.cos(u) ** (2 * n_b - 2)
    x = np.tan(u)

    if n_c == 1:
        norm = float(np.sum(w))
        moment = float(np.sum(w * x ** 2)) / norm
        return moment, moment

    # leading coordinate looped separately to bound the grid size
    rest = np.stack([g.ravel() for g in np.meshgrid(*([x] * (n_c - 1)), indexing="ij")], axis=-1)
    rest_w = np.prod(
        np.stack([g.ravel() for g in np.meshgrid(*([w] * (n_c - 1)), indexing="ij")], axis=-1),
        axis=-1,
    )
    norm = sum_sq = sq_sum = 0.0
    for x0, w0 in zip(x, w):
        pts = np.concatenate([np.full((rest.shape[0], 1), x0), rest], axis=1)
        dens = w0 * rest_w * _vandermonde_sq(pts)
        norm += float(np.sum(dens))
        sum_sq += float(np.sum(dens * np.sum(pts ** 2, axis=-1)))
        sq_sum += float(np.sum(dens * np.sum(pts, axis=-1) ** 2))
    return sum_sq / norm, sq_sum / norm


def moments_B1B2(n_b: int, n_c: int, nodes: int | None = None) -> MomentReport:
    """
    Solve for B1, B2 from the two second moments of the u(N_c) distribution.

    The linear system is

        N_c B1 +     B2 = E[(sum x)^2] / N_c
            B1 + N_c B2 = E[sum x^2]   / N_c

    For N_c = 1 the two moments coincide and the system is singular; we
    report B1 = 0 and B2 = E[x^2], since Cas2 = q^2 there.

    Args:
        n_b: Boson flavors (must exceed n_c)
        n_c: Colors (at most 3)
        nodes: Gauss-Legendre nodes per dimension (default Config.MOMENT_NODES)

    Raises:
        DivergentMoments: if n_b <= n_c (the Cauchy regime has no second moments)
    """
    if n_c < 1:
        raise InvalidInput("N_c must be at least 1", module="weights")
    if n_b <= n_c:
        raise DivergentMoments(
            f"second moments diverge for N_b={n_b} <= N_c={n_c}; "
            "the Cauchy-regime distribution has no finite variance",
            module="weights",
        )
    if n_c > MAX_MOMENT_NC:
        raise BudgetExceeded(f"moment quadrature supports N_c <= {MAX_MOMENT_NC}", module="weights")
    nodes = Config.MOMENT_NODES if nodes is None else nodes

    tr_x2, tr_x_sq = _eigenvalue_moments(n_c, n_b, nodes)
    coarse_x2, coarse_sq = _eigenvalue_moments(n_c, n_b, max(nodes // 2, 2))
    err_x2 = abs(tr_x2 - coarse_x2)
    err_sq = abs(tr_x_sq - coarse_sq)

    if n_c == 1:
        b1, b2 = 0.0, tr_x_sq
    else:
        system = np.array([[n_c, 1.0], [1.0, n_c]])
        rhs = np.array([tr_x_sq / n_c, tr_x2 / n_c])
        b1, b2 = (float(v) for v in np.linalg.solve(system, rhs))

    logger.debug(
        "moments N_c=%d N_b=%d: %.12g, %.12g (errors %.2g, %.2g)",
        n_c, n_b, tr_x2, tr_x_sq, err_x2, err_sq,
    )
    return MomentReport(
        n_b=n_b,
        n_c=n_c,
        tr_x2=tr_x2,
        tr_x_sq=tr_x_sq,
        b1=b1,
        b2=b2,
        tr_x2_error=err_x2,
        tr_x_sq_error=err_sq,
        nodes=nodes,
    )
