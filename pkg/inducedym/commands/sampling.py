"""Monte Carlo runs on a complex read from a description file."""

from ..cellcomplex import load_complex, parse_contour
from ..errors import InvalidInput
from ..montecarlo import mc_run
from .base import BaseCommand, CommandResult, OutputFormat, RunConfig
from .registry import command


@command
class McCommand(BaseCommand):
    id = "mc"
    description = "Metropolis simulation of the induced or Wilson action"

    def add_arguments(self, parser) -> None:
        parser.add_argument("--complex", help="Complex description file (JSON)")
        parser.add_argument(
            "--contour",
            help="Extra contours separated by ;, each plaquette:P, steps:L:S,... or a JSON file",
        )
        parser.add_argument("--nc", dest="n_c", type=int, help="Number of colors")
        parser.add_argument("--nb", dest="n_b", type=int, help="Boson species")
        parser.add_argument("--nf", dest="n_f", type=int, help="Fermion species")
        parser.add_argument("--alpha-b", dest="alpha_b", help="Boson coupling")
        parser.add_argument("--alpha-f", dest="alpha_f", help="Fermion coupling")
        parser.add_argument("--beta", type=float, help="Wilson action coupling")
        parser.add_argument("--steps", type=int, help="Measurements per chain")
        parser.add_argument("--epsilon", type=float, help="Initial proposal step size")
        parser.add_argument("--chains", type=int, help="Independent chains")
        parser.add_argument("--therm", type=int, help="Thermalization sweeps")

    def run(self, config: RunConfig) -> CommandResult:
        if not config.complex:
            raise InvalidInput("--complex is required", module="cli")
        complex_ = load_complex(config.complex)
        contours = [parse_contour(spec, complex_) for spec in _contour_specs(config)]
        report = mc_run(
            complex_,
            config.couplings(),
            config.steps,
            epsilon=config.epsilon,
            seed=config.seed,
            contours=contours,
            n_therm=config.therm,
            chains=config.chains,
        )
        payload = report.to_dict()
        payload["summary"] = report.summary_rows()
        return CommandResult(
            command=self.id,
            payload=payload,
            rows=report.series_rows(),
            default_format=OutputFormat.CSV,
        )


def _contour_specs(config: RunConfig) -> list[str]:
    if not config.contour:
        return []
    return [s for s in config.contour.split(";") if s]
