"""Representation data: dimensions, charges, Casimirs and weight counts."""

from ..repn import (
    casimir1,
    casimir2,
    charge,
    enumerate_signatures,
    expected_weight_sum,
    parse_signature,
    weight_multiplicities,
    weyl_dimension,
)
from .base import BaseCommand, CommandResult, OutputFormat, RunConfig
from .registry import command

DEFAULT_MAX_ABS = 2


@command
class RepnCommand(BaseCommand):
    id = "repn"
    description = "Dimensions, charges, Casimirs and weight systems of U(N_c) irreps"

    def add_arguments(self, parser) -> None:
        parser.add_argument("--nc", dest="n_c", type=int, help="Number of colors")
        parser.add_argument("--signature", action="append", help="Signature such as 2,0,-1 (repeatable)")
        parser.add_argument("--max-abs", dest="max_abs", type=int, help="List all signatures with |lambda_i| <= this")

    def run(self, config: RunConfig) -> CommandResult:
        if config.signature:
            sigs = [parse_signature(s) for s in config.signature]
        else:
            sigs = enumerate_signatures(config.n_c, config.max_abs or DEFAULT_MAX_ABS)

        rows = []
        for sig in sigs:
            table = weight_multiplicities(sig)
            rows.append({
                "signature": str(sig),
                "dimension": weyl_dimension(sig),
                "charge": charge(sig),
                "casimir2": casimir2(sig),
                "casimir1": float(casimir1(sig)),
                "weights": len(table.multiplicities),
                "multiplicity_sum": table.dimension,
                "weight_sum_ok": tuple(table.weight_sum()) == expected_weight_sum(sig),
            })
        return CommandResult(
            command=self.id,
            payload={"irreps": rows},
            rows=rows,
            default_format=OutputFormat.CSV,
        )
