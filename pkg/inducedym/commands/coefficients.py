"""Character coefficients of the one-plaquette weight and the one-plaquette Wilson loop."""

from fractions import Fraction

import mpmath

from ..config import Config
from ..errors import InvalidInput
from ..repn import IrrepSignature, parse_signature, weyl_dimension
from ..residues import char_coefficient_oracle, wilson_exact
from ..weights import (
    cauchy_slope,
    char_coefficient,
    char_coefficient_quadrature,
    delta_limit_deviation,
    moments_B1B2,
    singularity_exponent,
    taylor_coefficient,
    taylor_law_prediction,
    wilson_loop_one_plaquette,
)
from .base import BaseCommand, CommandResult, OutputFormat, RunConfig
from .registry import command

ENGINES = ("det", "residue", "quadrature")
DIAGNOSTICS = ("delta", "taylor", "cusp", "exponent", "moments")


def _add_model_arguments(parser) -> None:
    parser.add_argument("--nc", dest="n_c", type=int, help="Number of colors")
    parser.add_argument("--nb", dest="n_b", type=int, help="Boson species")
    parser.add_argument("--nf", dest="n_f", type=int, help="Fermion species")
    parser.add_argument("--alpha-b", dest="alpha_b", help="Boson coupling (e.g. 0.4 or 2/5)")
    parser.add_argument("--alpha-f", dest="alpha_f", help="Fermion coupling")
    parser.add_argument("--beta", type=float, help="Wilson action coupling (replaces the induced weight)")


def _number_fields(value) -> dict:
    """Float value plus the exact rational when there is one."""
    if isinstance(value, Fraction):
        return {"value": float(value), "exact": str(value)}
    return {"value": float(value)}


def _engine(config: RunConfig) -> str:
    if config.engine not in ENGINES:
        raise InvalidInput(f"engine must be one of {', '.join(ENGINES)}", module="cli")
    return config.engine


@command
class CoeffCommand(BaseCommand):
    id = "coeff"
    description = "Character coefficients c_lambda(alpha) and their asymptotic diagnostics"

    def add_arguments(self, parser) -> None:
        _add_model_arguments(parser)
        parser.add_argument("--signature", action="append", help="Signature such as 1,0 (repeatable)")
        parser.add_argument("--engine", choices=ENGINES, help="det (default), residue or quadrature")
        parser.add_argument("--grid", type=int, help="Quadrature points per angle")
        parser.add_argument("--diagnostics", choices=DIAGNOSTICS, help="Also report an asymptotic diagnostic")

    def _coefficient(self, sig: IrrepSignature, config: RunConfig, engine: str):
        couplings = config.couplings()
        if engine == "residue":
            return char_coefficient_oracle(sig, couplings)
        if engine == "quadrature":
            return char_coefficient_quadrature(sig, couplings, grid=config.grid or 64)
        return char_coefficient(sig, couplings).value

    def run(self, config: RunConfig) -> CommandResult:
        engine = _engine(config)
        if config.signature:
            sigs = [parse_signature(s) for s in config.signature]
        else:
            sigs = [IrrepSignature.trivial(config.n_c), IrrepSignature.fundamental(config.n_c)]

        rows = []
        with mpmath.workdps(Config.PRECISION):
            c0 = self._coefficient(IrrepSignature.trivial(config.n_c), config, engine)
            for sig in sigs:
                c = self._coefficient(sig, config, engine)
                ratio = c / (weyl_dimension(sig) * c0) if c0 else float("nan")
                fields = _number_fields(c)
                row = {"signature": str(sig), "engine": engine, "c_lambda": fields["value"]}
                if "exact" in fields:
                    row["c_lambda_exact"] = fields["exact"]
                row["ratio"] = float(ratio)
                rows.append(row)

        payload = {"couplings": config.couplings().to_dict(), "coefficients": rows}
        if config.diagnostics:
            payload["diagnostics"] = self._diagnostics(config, sigs)
        return CommandResult(command=self.id, payload=payload, rows=rows, default_format=OutputFormat.CSV)

    def _diagnostics(self, config: RunConfig, sigs: list[IrrepSignature]) -> dict:
        kind = config.diagnostics
        if kind == "moments":
            return moments_B1B2(config.n_b, config.n_c).to_dict()
        if kind == "exponent":
            return singularity_exponent(config.n_c, config.n_b).to_dict()
        if kind == "delta":
            couplings = config.couplings()
            return {str(s): delta_limit_deviation(s, couplings) for s in sigs}
        if kind == "taylor":
            report = moments_B1B2(config.n_b, config.n_c)
            return {
                str(s): {
                    "extrapolated": taylor_coefficient(s, config.n_b),
                    "predicted": taylor_law_prediction(s, report.b1, report.b2),
                }
                for s in sigs
            }
        return {str(s): cauchy_slope(s, config.n_b) for s in sigs}


@command
class OnePlaquetteCommand(BaseCommand):
    id = "oneplaq"
    description = "Wilson loop <Tr U> of a single plaquette"

    def add_arguments(self, parser) -> None:
        _add_model_arguments(parser)
        parser.add_argument("--engine", choices=ENGINES, help="det (default), residue or quadrature")
        parser.add_argument("--grid", type=int, help="Quadrature points per angle")

    def run(self, config: RunConfig) -> CommandResult:
        engine = _engine(config)
        couplings = config.couplings()
        if engine == "residue":
            value = wilson_exact(couplings)
        elif engine == "quadrature":
            grid = config.grid or 64
            n_c = config.n_c
            fund = char_coefficient_quadrature(IrrepSignature.fundamental(n_c), couplings, grid=grid)
            triv = char_coefficient_quadrature(IrrepSignature.trivial(n_c), couplings, grid=grid)
            value = fund / triv
        else:
            value = wilson_loop_one_plaquette(couplings)
        row = {"engine": engine, **_number_fields(value)}
        payload = {"couplings": couplings.to_dict(), **row}
        return CommandResult(command=self.id, payload=payload, rows=[row])
