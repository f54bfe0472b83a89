"""Plaquette actions: the induced determinant action and the Wilson action."""

import math
from dataclasses import dataclass

import numpy as np

from ..errors import InvalidInput
from ..weights import ModelCouplings


class SingularAction(Exception):
    """The action is infinite at this holonomy (vanishing fermion determinant)."""


@dataclass(frozen=True)
class PlaquetteAction:
    """
    S_p(H) for the plaquette holonomy H, with weight exp(-S_p).

    induced: S_p = 2 N_b ln|Det(1 - a_b H)| - 2 N_f ln|Det(1 - a_f H)|
    wilson:  S_p = -(beta / N_c) Re Tr H
    """
    n_c: int
    n_b: int = 0
    n_f: int = 0
    alpha_b: float = 0.0
    alpha_f: float = 0.0
    beta: float | None = None

    @classmethod
    def from_couplings(cls, couplings: ModelCouplings, alpha_b: float | None = None) -> "PlaquetteAction":
        return cls(
            n_c=couplings.n_c,
            n_b=couplings.n_b,
            n_f=couplings.n_f,
            alpha_b=float(couplings.alpha_b if alpha_b is None else alpha_b),
            alpha_f=float(couplings.alpha_f),
            beta=couplings.beta,
        )

    def _log_abs_det(self, alpha: float, h: np.ndarray) -> float:
        sign, logdet = np.linalg.slogdet(np.eye(self.n_c) - alpha * h)
        if sign == 0 or not math.isfinite(logdet):
            raise SingularAction(f"1 - {alpha} U(dp) is singular")
        return float(logdet)

    def __call__(self, h: np.ndarray) -> float:
        if self.beta is not None:
            return -(self.beta / self.n_c) * float(np.trace(h).real)
        s = 0.0
        if self.n_b and self.alpha_b:
            s += 2 * self.n_b * self._log_abs_det(self.alpha_b, h)
        if self.n_f and self.alpha_f:
            s -= 2 * self.n_f * self._log_abs_det(self.alpha_f, h)
        return s


def plaquette_actions(
    couplings: ModelCouplings,
    n_plaquettes: int,
    alphas: list[float] | None = None,
) -> list[PlaquetteAction]:
    """One action per plaquette, optionally with per-plaquette alpha_b."""
    if alphas is None:
        action = PlaquetteAction.from_couplings(couplings)
        return [action] * n_plaquettes
    if len(alphas) != n_plaquettes:
        raise InvalidInput("need one alpha_b per plaquette", module="montecarlo")
    if any(not abs(a) < 1 for a in alphas):
        raise InvalidInput("|alpha_b| must be < 1 on every plaquette", module="montecarlo")
    return [PlaquetteAction.from_couplings(couplings, a) for a in alphas]
