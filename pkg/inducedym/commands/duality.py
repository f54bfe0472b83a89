"""Abelian dual sums on a complex read from a description file."""

from ..abeliandual import DualWeightConfig, direct_u1_oracle, dual_partition, dual_wilson
from ..cellcomplex import load_complex, parse_contour
from ..errors import InvalidInput
from .base import BaseCommand, CommandResult, RunConfig
from .registry import command


@command
class DualCommand(BaseCommand):
    id = "dual"
    description = "U(1) partition function and Wilson loops as closed 2-chain sums"

    def add_arguments(self, parser) -> None:
        parser.add_argument("--complex", help="Complex description file (JSON)")
        parser.add_argument("--alpha", type=float, help="Uniform plaquette coupling")
        parser.add_argument("--nmax", type=int, help="L1 cutoff of the chain sum (default: automatic)")
        parser.add_argument("--contour", help="Wilson loop contour: plaquette:P, steps:L:S,... or a JSON file")
        parser.add_argument("--grid", type=int, help="Also run the quadrature oracle on this grid")
        parser.add_argument("--tolerance", type=float, help="Tail tolerance")

    def run(self, config: RunConfig) -> CommandResult:
        if not config.complex:
            raise InvalidInput("--complex is required", module="cli")
        if config.alpha is None:
            raise InvalidInput("--alpha is required", module="cli")
        complex_ = load_complex(config.complex)
        weights = DualWeightConfig.uniform(complex_, config.alpha, n_max=config.nmax, tolerance=config.tolerance)

        if config.contour:
            contour = parse_contour(config.contour, complex_)
            result = dual_wilson(complex_, contour, weights)
        else:
            contour = None
            result = dual_partition(complex_, weights)
        payload = {"complex": complex_.name, "alpha": config.alpha, **result.to_dict()}

        if config.grid:
            oracle = direct_u1_oracle(complex_, weights, grid=config.grid, contour=contour)
            payload["oracle"] = oracle.to_dict()
        return CommandResult(command=self.id, payload=payload, rows=[{k: v for k, v in payload.items() if k != "oracle"}])
