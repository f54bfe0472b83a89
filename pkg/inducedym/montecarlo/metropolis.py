"""Metropolis simulation of plaquette actions on a cell complex."""

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..cellcomplex import CellComplex, Contour
from ..config import Config
from ..errors import InvalidInput
from ..logging import get_logger
from ..weights import ModelCouplings
from .action import PlaquetteAction, SingularAction, plaquette_actions
from .haar import random_hermitian, spawn_streams, unitary_exponential
from .links import LinkConfiguration
from .stats import McReport, estimate, merge_estimates

logger = get_logger(__name__)

MAX_EPSILON = 4.0


class MetropolisChain:
    """
    A single sequential Markov chain.

    Each link update proposes U -> exp(i eps H) U with H Gaussian Hermitian
    and accepts with probability min(1, exp(-dS)), where dS only involves
    the plaquettes touching the link.
    """

    def __init__(
        self,
        complex_: CellComplex,
        actions: list[PlaquetteAction],
        n_c: int,
        rng: np.random.Generator,
        epsilon: float = 0.5,
        start: str = "hot",
    ):
        if start not in ("hot", "cold"):
            raise InvalidInput(f"unknown start '{start}'", module="montecarlo")
        self.complex = complex_
        self.actions = actions
        self.n_c = n_c
        self.rng = rng
        self.epsilon = float(epsilon)
        if start == "hot":
            self.config = LinkConfiguration.hot(complex_, n_c, rng)
        else:
            self.config = LinkConfiguration.cold(complex_, n_c)
        self.accepted = 0
        self.proposed = 0
        self.singular = 0
        self.updates = 0
        self._plaquette_action = self._all_actions()

    def _action(self, p: int) -> float:
        try:
            return self.actions[p](self.config.plaquette_holonomy(p))
        except SingularAction:
            return math.inf

    def _all_actions(self) -> list[float]:
        return [self._action(p) for p in range(self.complex.n_plaquettes)]

    def update_link(self, l: int) -> bool:
        touching = self.complex.link_plaquettes[l]
        old_u = self.config.matrices[l].copy()
        step = unitary_exponential(random_hermitian(self.n_c, self.rng), self.epsilon)
        self.config.matrices[l] = step @ old_u
        self.proposed += 1
        self.updates += 1

        accepted = False
        try:
            new = [self.actions[p](self.config.plaquette_holonomy(p)) for p in touching]
        except SingularAction:
            self.singular += 1
            new = None
        if new is not None:
            old = sum(self._plaquette_action[p] for p in touching)
            ds = sum(new) - old
            # Leaving a singular configuration is always accepted
            accepted = math.isinf(old) or ds <= 0 or self.rng.random() < math.exp(-ds)
        if accepted:
            self.accepted += 1
            for p, s in zip(touching, new):
                self._plaquette_action[p] = s
        else:
            self.config.matrices[l] = old_u

        if self.updates % Config.MC_REUNITARIZE_EVERY == 0:
            self.config.reunitarize()
            self._plaquette_action = self._all_actions()
        return accepted

    def sweep(self) -> None:
        for l in range(self.complex.n_links):
            self.update_link(l)

    @property
    def acceptance(self) -> float:
        return self.accepted / self.proposed if self.proposed else 0.0

    def reset_counters(self) -> None:
        self.accepted = 0
        self.proposed = 0

    def thermalize(self, sweeps: int, tune: bool = True) -> None:
        """Run sweeps, adjusting epsilon toward the acceptance window every tuning interval."""
        low, high = Config.MC_ACCEPTANCE_WINDOW
        interval = max(Config.MC_TUNE_INTERVAL, 1)
        self.reset_counters()
        for sweep in range(1, sweeps + 1):
            self.sweep()
            if tune and sweep % interval == 0:
                rate = self.acceptance
                if rate < low:
                    self.epsilon *= 0.8
                elif rate > high:
                    self.epsilon = min(self.epsilon * 1.25, MAX_EPSILON)
                logger.debug("tuning after %d sweeps: acceptance=%.3f epsilon=%.4g", sweep, rate, self.epsilon)
                self.reset_counters()
        self.reset_counters()


def _measure(
    config: LinkConfiguration,
    contours: list[Contour],
) -> dict[str, float]:
    traces = config.plaquette_traces()
    values = {f"plaquette_{p}": float(t.real) for p, t in enumerate(traces)}
    if len(traces):
        values["plaquette_mean"] = float(np.mean(traces.real)) / config.n_c
    for k, contour in enumerate(contours):
        t = np.trace(config.contour_holonomy(contour))
        values[f"loop_{k}"] = float(t.real)
        values[f"loop_{k}_imag"] = float(t.imag)
    return values


def _run_chain(
    complex_: CellComplex,
    actions: list[PlaquetteAction],
    n_c: int,
    rng: np.random.Generator,
    steps: int,
    n_therm: int,
    epsilon: float,
    contours: list[Contour],
    tune: bool,
    start: str,
) -> tuple[dict[str, np.ndarray], MetropolisChain]:
    chain = MetropolisChain(complex_, actions, n_c, rng, epsilon=epsilon, start=start)
    chain.thermalize(n_therm, tune=tune)
    series: dict[str, list[float]] = {}
    for _ in range(steps):
        chain.sweep()
        for name, value in _measure(chain.config, contours).items():
            series.setdefault(name, []).append(value)
    return {k: np.asarray(v) for k, v in series.items()}, chain


def mc_run(
    complex_: CellComplex,
    couplings: ModelCouplings,
    steps: int,
    epsilon: float = 0.5,
    seed: int = 0,
    contours: list[Contour] | None = None,
    n_therm: int | None = None,
    chains: int = 1,
    alphas: list[float] | None = None,
    tune: bool = True,
    start: str = "hot",
) -> McReport:
    """
    Metropolis estimate of plaquette traces and contour holonomies.

    Observables: ``plaquette_<p>`` = Re Tr U(dp), ``plaquette_mean`` =
    average of Re Tr U(dp) / N_c, and for each contour k ``loop_<k>`` and
    ``loop_<k>_imag`` = Re/Im Tr U(C). One measurement is taken after
    every sweep.

    Args:
        complex_: Cell complex carrying the links and plaquettes
        couplings: Induced or Wilson couplings
        steps: Measurements per chain
        epsilon: Initial proposal step size
        seed: Root seed; chain i uses the i-th spawned Philox stream
        contours: Extra closed contours to measure
        n_therm: Thermalization sweeps (default max(2 tuning intervals, steps/10))
        chains: Independent chains, merged by inverse-variance weighting
        alphas: Optional per-plaquette alpha_b overriding couplings.alpha_b
        tune: Adjust epsilon toward the acceptance window while thermalizing
        start: "hot" (Haar) or "cold" (identity) initial configuration
    """
    if steps < 2:
        raise InvalidInput("need at least two measurements", module="montecarlo")
    if not epsilon > 0:
        raise InvalidInput("step size must be positive", module="montecarlo")
    if chains < 1:
        raise InvalidInput("need at least one chain", module="montecarlo")
    contours = list(contours or [])
    if n_therm is None:
        n_therm = max(2 * Config.MC_TUNE_INTERVAL, steps // 10)
    actions = plaquette_actions(couplings, complex_.n_plaquettes, alphas)
    streams = spawn_streams(seed, chains)

    logger.info(
        "mc: %s, N_c=%d, %d chains x %d measurements, %d thermalization sweeps",
        complex_.name or "complex", couplings.n_c, chains, steps, n_therm,
    )

    def work(rng: np.random.Generator):
        return _run_chain(
            complex_, actions, couplings.n_c, rng, steps, n_therm, epsilon, contours, tune, start
        )

    workers = max(1, min(chains, Config.THREADS))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(work, streams))

    names = list(results[0][0])
    observables = {
        name: merge_estimates([estimate(series[name]) for series, _ in results]) for name in names
    }
    runs = [chain for _, chain in results]
    acceptance = float(np.mean([c.acceptance for c in runs]))
    singular = sum(c.singular for c in runs)
    eps = float(np.mean([c.epsilon for c in runs]))
    logger.info("mc: acceptance=%.3f epsilon=%.4g singular rejections=%d", acceptance, eps, singular)
    if singular:
        logger.warning("mc: %d proposals hit a singular determinant and were rejected", singular)

    return McReport(
        observables=observables,
        acceptance=acceptance,
        steps=steps,
        seed=seed,
        n_therm=n_therm,
        epsilon=eps,
        chains=chains,
        singular_rejections=singular,
        series={name: np.stack([series[name] for series, _ in results]) for name in names},
    )


def wilson_loop_mc(
    complex_: CellComplex,
    contour: Contour,
    couplings: ModelCouplings,
    steps: int,
    seed: int = 0,
    **kwargs,
) -> McReport:
    """Estimate <Tr U(C)> along one contour; the result is observable ``loop_0``."""
    if contour.steps:
        Contour.from_steps(complex_, contour.steps)
    return mc_run(complex_, couplings, steps, seed=seed, contours=[contour], **kwargs)
