"""Heat-kernel comparison weight: the character sum with Gaussian Casimir damping."""

import math

import numpy as np

from ..config import Config
from ..errors import InvalidInput, TruncationError
from ..logging import get_logger
from ..repn import casimir2, character_at_torus, charge, enumerate_signatures, weyl_dimension

logger = get_logger(__name__)


def heat_kernel_weight(
    theta,
    t: float,
    cutoff: float,
    r: float = 0.0,
    tolerance: float | None = None,
) -> float:
    """
    Truncated heat kernel sum over (Cas2 + r q^2) <= cutoff of
    exp(-(Cas2 + r q^2) t) d_lambda chi_lambda(e^{i theta}).

    Cas2 >= sum lambda_j^2 >= max |lambda_j|^2, so every included signature
    has |lambda_j| <= sqrt(cutoff). The tail is estimated from the excluded
    signatures of the next box, bounded by d_lambda^2 exp(-E t).

    Args:
        theta: Torus angles, one per color
        t: Diffusion time (> 0)
        cutoff: Largest retained Cas2 + r q^2
        r: Weight of the U(1) charge term (>= 0)
        tolerance: Allowed tail (default Config.TAIL_TOLERANCE)

    Raises:
        TruncationError: if the tail estimate exceeds the tolerance
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    if t <= 0:
        raise InvalidInput(f"heat kernel time must be positive, got {t}", module="weights")
    if cutoff < 0 or r < 0:
        raise InvalidInput("cutoff and r must be non-negative", module="weights")
    tol = Config.TAIL_TOLERANCE if tolerance is None else tolerance
    n_c = theta.shape[0]
    radius = math.isqrt(int(math.floor(cutoff)))

    def energy(sig) -> float:
        return casimir2(sig) + r * charge(sig) ** 2

    value = 0.0
    tail = 0.0
    for sig in enumerate_signatures(n_c, radius + 1):
        e = energy(sig)
        d = weyl_dimension(sig)
        if e <= cutoff:
            value += math.exp(-e * t) * d * character_at_torus(sig, theta).real
        else:
            tail += d * d * math.exp(-e * t)

    logger.debug("heat kernel t=%g cutoff=%g: value=%.12g tail=%.3g", t, cutoff, value, tail)
    if tail > tol * max(abs(value), 1.0):
        raise TruncationError(
            f"cutoff {cutoff} too small for t={t}: tail estimate {tail:.3g}",
            module="weights",
        )
    return value
