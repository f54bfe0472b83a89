"""Fock-space identity checks on Haar-random matrices and the singlet series."""

from ..config import Config
from ..errors import InvalidInput
from ..fockcheck import singlet_hilbert_series, singlet_series_exact, verify_det_identity
from ..montecarlo import haar_sample, spawn_streams
from .base import BaseCommand, CommandResult, RunConfig
from .registry import command

DEFAULT_CUTOFF = 40


@command
class FockCommand(BaseCommand):
    id = "fock"
    description = "Determinant-as-Fock-trace identity and invariant-sector dimensions"

    def add_arguments(self, parser) -> None:
        parser.add_argument("--nc", dest="n_c", type=int, help="Number of colors")
        parser.add_argument("--nb", dest="n_b", type=int, help="Boson species")
        parser.add_argument("--alpha", type=float, help="Coupling in [0, 1)")
        parser.add_argument("--cutoff", type=int, help="Boson-number cutoff K (default 40)")
        parser.add_argument("--samples", type=int, help="Number of Haar-random matrices")
        parser.add_argument("--degree", type=int, help="Also list singlet dimensions up to this degree")

    def run(self, config: RunConfig) -> CommandResult:
        if config.n_b < 1:
            raise InvalidInput("--nb must be at least 1", module="cli")
        if config.alpha is None and config.degree is None:
            raise InvalidInput("give --alpha for the identity check or --degree for the singlet series", module="cli")
        payload: dict = {"n_c": config.n_c, "n_b": config.n_b}
        rows = []
        if config.alpha is not None:
            cutoff = DEFAULT_CUTOFF if config.cutoff is None else config.cutoff
            rng = spawn_streams(config.seed, 1)[0]
            for i in range(config.samples):
                u = haar_sample(config.n_c, rng)
                check = verify_det_identity(u, config.alpha, config.n_b, cutoff)
                rows.append({"sample": i, **check.to_dict()})
            payload.update({"alpha": config.alpha, "cutoff": cutoff, "checks": rows})

        if config.degree is not None:
            if config.degree <= Config.HILBERT_MAX_DEGREE and config.n_c <= Config.HILBERT_MAX_NC:
                series = singlet_hilbert_series(config.n_c, config.n_b, config.degree, config.grid)
                payload["singlet_dims"] = series.dims
                payload["rounding_residual"] = series.residual
            else:
                payload["singlet_dims"] = singlet_series_exact(config.n_c, config.n_b, config.degree).dims
        return CommandResult(command=self.id, payload=payload, rows=rows)
