"""Continuum partition functions of two-dimensional induced gauge theory.

Both the disk amplitude and the closed-surface partition function are
character sums damped by a Casimir energy:

    quadratic:  E(lambda) = (Cas2 + r q^2) / 2
    cauchy:     E(lambda) = Cas1

Sums are truncated by shells of max |lambda_i| and certified by the
magnitude of the first excluded shell.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from ..config import Config
from ..errors import InvalidInput, TruncationError
from ..logging import get_logger, warn_near_limit
from ..repn import (
    IrrepSignature,
    casimir1,
    casimir2,
    character_at_torus,
    charge,
    signature_shell,
    weyl_dimension,
)

logger = get_logger(__name__)

AUTO_RADIUS_CAP = 96


class CasimirKind(str, Enum):
    QUADRATIC = "quadratic"
    CAUCHY = "cauchy"


@dataclass(frozen=True)
class ContinuumParams:
    """Area, U(1) coupling ratio r = B1/B2, genus and truncation of a continuum sum.

    ``max_abs`` of None grows the shell radius until the first excluded
    shell is below tolerance.
    """
    mu: float
    r: float = 0.0
    genus: int = 0
    kind: CasimirKind = CasimirKind.QUADRATIC
    n_c: int = 1
    max_abs: int | None = None
    tolerance: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", CasimirKind(self.kind))
        if not self.mu > 0:
            raise InvalidInput(f"area mu must be positive, got {self.mu}", module="twodim")
        if self.genus < 0:
            raise InvalidInput(f"genus must be non-negative, got {self.genus}", module="twodim")
        if self.n_c < 1:
            raise InvalidInput("N_c must be at least 1", module="twodim")
        if self.r < 0:
            raise InvalidInput("r = B1/B2 must be non-negative", module="twodim")
        if self.max_abs is not None and self.max_abs < 0:
            raise InvalidInput("cutoff must be non-negative", module="twodim")

    @property
    def tail_tolerance(self) -> float:
        return Config.TAIL_TOLERANCE if self.tolerance is None else self.tolerance

    def energy(self, sig: IrrepSignature) -> float:
        if self.kind is CasimirKind.CAUCHY:
            return float(casimir1(sig))
        return 0.5 * (casimir2(sig) + self.r * charge(sig) ** 2)

    def to_dict(self) -> dict:
        return {
            "mu": self.mu,
            "r": self.r,
            "genus": self.genus,
            "kind": self.kind.value,
            "n_c": self.n_c,
            "max_abs": self.max_abs,
        }


@dataclass
class SeriesValue:
    """A truncated character sum with its certified tail."""
    value: complex | float
    tail_bound: float
    terms: int
    radius: int
    metadata: dict = field(default_factory=dict)

    def __float__(self) -> float:
        return float(np.real(self.value))

    def to_dict(self) -> dict:
        value = self.value
        out = {
            "value": float(np.real(value)),
            "tail_bound": self.tail_bound,
            "terms": self.terms,
            "cutoff": self.radius,
        }
        if isinstance(value, complex) and value.imag:
            out["value_imag"] = value.imag
        out.update(self.metadata)
        return out


def shell_series(
    n_c: int,
    term: Callable[[IrrepSignature], tuple[complex, float]],
    max_abs: int | None,
    tolerance: float,
    label: str,
    module: str = "twodim",
) -> SeriesValue:
    """
    Sum term(lambda) over shells max |lambda_i| = 0, 1, 2, ...

    ``term`` returns (contribution, magnitude bound). The tail is the summed
    bound of the first excluded shell. With a fixed ``max_abs`` an
    oversized tail raises; otherwise the radius grows until it fits.

    Raises:
        TruncationError: if the tail exceeds tolerance at the chosen radius
    """
    value = 0.0
    terms = 0
    radius = 0
    shell_cache: dict[int, list[tuple[complex, float]]] = {}

    def shell(k: int) -> list[tuple[complex, float]]:
        if k not in shell_cache:
            shell_cache[k] = [term(sig) for sig in signature_shell(n_c, k)]
        return shell_cache[k]

    limit = AUTO_RADIUS_CAP if max_abs is None else max_abs
    while True:
        contributions = shell(radius)
        value += sum(c for c, _ in contributions)
        terms += len(contributions)
        tail = float(sum(b for _, b in shell(radius + 1)))
        scale = max(abs(value), 1.0)
        if max_abs is None and tail <= tolerance * scale:
            break
        if radius >= limit:
            break
        radius += 1
        shell_cache.pop(radius - 1, None)

    logger.debug("%s: radius=%d terms=%d value=%s tail=%.3g", label, radius, terms, value, tail)
    if tail > tolerance * max(abs(value), 1.0):
        raise TruncationError(
            f"{label}: tail bound {tail:.3g} above tolerance {tolerance:.1g} at cutoff {radius}",
            module=module,
        )
    warn_near_limit(logger, f"{label}: tail bound", tail, tolerance * max(abs(value), 1.0))
    return SeriesValue(value=value, tail_bound=tail, terms=terms, radius=radius)


def gamma_disk(theta, params: ContinuumParams) -> SeriesValue:
    """
    Disk amplitude sum_lambda d_lambda exp(-mu E(lambda)) chi_lambda(e^{i theta}).

    The tail bound uses |chi_lambda| <= d_lambda.
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    if theta.shape != (params.n_c,):
        raise InvalidInput(f"expected {params.n_c} boundary angles", module="twodim")

    def term(sig: IrrepSignature) -> tuple[complex, float]:
        d = weyl_dimension(sig)
        damp = math.exp(-params.mu * params.energy(sig))
        return d * damp * character_at_torus(sig, theta), d * d * damp

    result = shell_series(
        params.n_c, term, params.max_abs, params.tail_tolerance, f"gamma_disk(mu={params.mu})"
    )
    result.value = complex(result.value)
    return result


def z_genus(params: ContinuumParams) -> SeriesValue:
    """Closed-surface partition function sum_lambda d_lambda^{2-2g} exp(-mu E(lambda))."""
    power = 2 - 2 * params.genus

    def term(sig: IrrepSignature) -> tuple[float, float]:
        value = float(weyl_dimension(sig)) ** power * math.exp(-params.mu * params.energy(sig))
        return value, value

    result = shell_series(
        params.n_c,
        term,
        params.max_abs,
        params.tail_tolerance,
        f"Z_{params.genus}(mu={params.mu}, {params.kind.value})",
    )
    result.value = float(result.value)
    return result
