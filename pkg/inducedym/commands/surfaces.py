"""Two-dimensional surfaces: continuum partition functions, gluing and lattice refinement."""

from ..errors import InvalidInput
from ..twodim import CasimirKind, ContinuumParams, glue_check, refinement_series, z_genus
from .base import BaseCommand, CommandResult, OutputFormat, RunConfig
from .registry import command


def _add_surface_arguments(parser) -> None:
    parser.add_argument("--nc", dest="n_c", type=int, help="Number of colors")
    parser.add_argument("--kind", choices=[k.value for k in CasimirKind], help="Casimir regime")
    parser.add_argument("--mu", type=float, help="Area")
    parser.add_argument("--genus", type=int, help="Surface genus")
    parser.add_argument("--tolerance", type=float, help="Tail tolerance")


def _kind(config: RunConfig) -> CasimirKind:
    try:
        return CasimirKind(config.kind)
    except ValueError as e:
        raise InvalidInput(f"unknown Casimir regime '{config.kind}'", module="cli") from e


def _require_mu(config: RunConfig) -> float:
    if config.mu is None:
        raise InvalidInput("--mu is required", module="cli")
    return config.mu


@command
class ZgCommand(BaseCommand):
    id = "zg"
    description = "Continuum partition function Z_g(mu) of a closed surface"

    def add_arguments(self, parser) -> None:
        _add_surface_arguments(parser)
        parser.add_argument("--r", type=float, help="U(1) coupling ratio B1/B2 (quadratic regime)")
        parser.add_argument("--max-abs", dest="max_abs", type=int, help="Fixed shell cutoff")

    def run(self, config: RunConfig) -> CommandResult:
        params = ContinuumParams(
            mu=_require_mu(config),
            r=config.r,
            genus=config.genus,
            kind=_kind(config),
            n_c=config.n_c,
            max_abs=config.max_abs,
            tolerance=config.tolerance,
        )
        result = z_genus(params)
        row = {**params.to_dict(), **result.to_dict()}
        return CommandResult(command=self.id, payload=row, rows=[row])


@command
class GlueCommand(BaseCommand):
    id = "glue"
    description = "Glue disks into a sphere or torus by Haar quadrature and compare with Z_g"

    def add_arguments(self, parser) -> None:
        _add_surface_arguments(parser)
        parser.add_argument("--mu-minus", dest="mu_minus", type=float, help="Area of the second disk")
        parser.add_argument("--r", type=float, help="U(1) coupling ratio B1/B2")
        parser.add_argument("--max-abs", dest="max_abs", type=int, help="Character cutoff")

    def run(self, config: RunConfig) -> CommandResult:
        mu = _require_mu(config)
        mu_minus = config.mu_minus if config.mu_minus is not None else mu
        params = ContinuumParams(
            mu=mu + mu_minus,
            r=config.r,
            genus=config.genus,
            kind=_kind(config),
            n_c=config.n_c,
            max_abs=config.max_abs,
            tolerance=config.tolerance,
        )
        result = glue_check(mu, mu_minus, params)
        row = result.to_dict()
        return CommandResult(command=self.id, payload=row, rows=[row])


@command
class Lattice2dCommand(BaseCommand):
    id = "lattice2d"
    description = "Lattice closed surfaces against the continuum as plaquettes are refined"

    def add_arguments(self, parser) -> None:
        _add_surface_arguments(parser)
        parser.add_argument("--nb", dest="n_b", type=int, help="Boson species")
        parser.add_argument(
            "--plaquettes",
            type=lambda s: [int(x) for x in s.split(",")],
            help="Comma-separated plaquette counts (default 4,16,64)",
        )

    def run(self, config: RunConfig) -> CommandResult:
        points = refinement_series(
            _kind(config),
            config.n_c,
            config.n_b,
            config.genus,
            _require_mu(config),
            plaquette_counts=tuple(config.plaquettes),
            tolerance=config.tolerance,
        )
        rows = [p.to_dict() for p in points]
        return CommandResult(
            command=self.id,
            payload={"kind": config.kind, "genus": config.genus, "points": rows},
            rows=rows,
            default_format=OutputFormat.CSV,
        )
