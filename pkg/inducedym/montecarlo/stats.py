"""Autocorrelation-corrected estimates and the Monte Carlo report."""

from dataclasses import dataclass, field

import numpy as np

from ..config import Config


def autocorrelation(series: np.ndarray) -> np.ndarray:
    """Normalized autocorrelation rho(t), t = 0 .. n-1, by zero-padded FFT."""
    x = np.asarray(series, dtype=float)
    n = len(x)
    d = x - x.mean()
    var = float(np.dot(d, d)) / n
    if n < 2 or var == 0.0:
        rho = np.zeros(n)
        if n:
            rho[0] = 1.0
        return rho
    f = np.fft.rfft(d, n=2 * n)
    acov = np.fft.irfft(f * np.conj(f), n=2 * n)[:n] / n
    return acov / var


def integrated_autocorrelation_time(series: np.ndarray, window: float | None = None) -> float:
    """
    tau_int = 1/2 + sum_{t=1}^{W} rho(t), with the automatic window: the
    smallest W satisfying W >= c tau_int(W).
    """
    c = Config.MC_WINDOW_FACTOR if window is None else window
    rho = autocorrelation(series)
    if len(rho) < 3:
        return 0.5
    taus = 0.5 + np.cumsum(rho[1:])
    lags = np.arange(1, len(rho))
    ok = lags >= c * taus
    idx = int(np.argmax(ok)) if ok.any() else len(taus) - 1
    return max(float(taus[idx]), 0.5)


@dataclass
class Estimate:
    mean: float
    error: float
    tau: float

    def to_dict(self) -> dict:
        return {"mean": self.mean, "error": self.error, "tau": self.tau}


def estimate(series: np.ndarray) -> Estimate:
    """Mean with standard error sqrt(2 tau_int var / n)."""
    x = np.asarray(series, dtype=float)
    n = len(x)
    tau = integrated_autocorrelation_time(x)
    var = float(np.var(x))
    error = float(np.sqrt(2.0 * tau * var / n)) if n else float("inf")
    return Estimate(mean=float(np.mean(x)), error=error, tau=tau)


def merge_estimates(estimates: list[Estimate]) -> Estimate:
    """Inverse-variance weighted mean over independent chains."""
    if len(estimates) == 1:
        return estimates[0]
    errors = np.array([e.error for e in estimates])
    if np.any(errors == 0):
        means = np.array([e.mean for e in estimates])
        return Estimate(float(means.mean()), 0.0, float(np.mean([e.tau for e in estimates])))
    w = 1.0 / errors ** 2
    mean = float(np.sum(w * [e.mean for e in estimates]) / np.sum(w))
    return Estimate(mean=mean, error=float(1.0 / np.sqrt(np.sum(w))), tau=float(np.mean([e.tau for e in estimates])))


@dataclass
class McReport:
    """Result of a Metropolis run, merged over chains."""
    observables: dict[str, Estimate]
    acceptance: float
    steps: int
    seed: int
    n_therm: int
    epsilon: float
    chains: int = 1
    singular_rejections: int = 0
    series: dict[str, np.ndarray] = field(default_factory=dict, repr=False)

    def __getitem__(self, name: str) -> Estimate:
        return self.observables[name]

    def to_dict(self) -> dict:
        return {
            "observables": {k: v.to_dict() for k, v in self.observables.items()},
            "acceptance": self.acceptance,
            "steps": self.steps,
            "seed": self.seed,
            "n_therm": self.n_therm,
            "epsilon": self.epsilon,
            "chains": self.chains,
            "singular_rejections": self.singular_rejections,
        }

    def summary_rows(self) -> list[dict]:
        return [
            {"observable": name, **est.to_dict()}
            for name, est in self.observables.items()
        ]

    def series_rows(self) -> list[dict]:
        """One row per (chain, measurement) with every observable as a column."""
        if not self.series:
            return []
        names = list(self.series)
        first = self.series[names[0]]
        rows = []
        for chain in range(first.shape[0]):
            for step in range(first.shape[1]):
                row = {"chain": chain, "step": step}
                row.update({name: float(self.series[name][chain, step]) for name in names})
                rows.append(row)
        return rows
