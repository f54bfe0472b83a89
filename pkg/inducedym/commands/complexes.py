"""Build standard complexes or describe an existing description file."""

from ..cellcomplex import (
    CellComplex,
    boundary_rank,
    build_closed_surface,
    build_hypercubic,
    build_polygon,
    complex_to_dict,
    kernel_basis_2chains,
    load_complex,
)
from ..errors import InvalidInput
from .base import BaseCommand, CommandResult, RunConfig
from .registry import command

BUILDERS = ("hypercubic", "polygon", "surface")


def complex_info(complex_: CellComplex) -> dict:
    return {
        "name": complex_.name,
        "sites": complex_.n_sites,
        "links": complex_.n_links,
        "plaquettes": complex_.n_plaquettes,
        "euler_characteristic": complex_.euler_characteristic(),
        "boundary2_rank": boundary_rank(complex_, 2),
        "closed_2chain_rank": len(kernel_basis_2chains(complex_)),
    }


@command
class ComplexCommand(BaseCommand):
    id = "complex"
    description = "Build a hypercubic, polygon or closed-surface complex, or describe one"

    def add_arguments(self, parser) -> None:
        parser.add_argument("--complex", help="Describe this complex file instead of building")
        parser.add_argument("--build", choices=BUILDERS, help="Builder to run")
        parser.add_argument(
            "--extents",
            type=lambda s: [int(x) for x in s.split(",")],
            help="Comma-separated cell counts per direction (hypercubic)",
        )
        parser.add_argument("--periodic", action="store_true", default=None, help="Periodic in every direction")
        parser.add_argument("--sides", type=int, help="Number of sides (polygon)")
        parser.add_argument("--genus", type=int, help="Genus (surface)")
        parser.add_argument("--name", help="Label stored in the description")

    def run(self, config: RunConfig) -> CommandResult:
        if config.complex:
            complex_ = load_complex(config.complex)
            info = complex_info(complex_)
            return CommandResult(command=self.id, payload=info, rows=[info])

        if config.build == "hypercubic":
            if not config.extents:
                raise InvalidInput("--extents is required for a hypercubic complex", module="cli")
            complex_ = build_hypercubic(tuple(config.extents), config.periodic, name=config.name)
        elif config.build == "polygon":
            if config.sides is None:
                raise InvalidInput("--sides is required for a polygon", module="cli")
            complex_ = build_polygon(config.sides, name=config.name)
        elif config.build == "surface":
            complex_ = build_closed_surface(config.genus, name=config.name)
        else:
            raise InvalidInput(f"give --complex or --build ({', '.join(BUILDERS)})", module="cli")

        # The payload stays loadable as a description file; info keys are ignored on load.
        info = complex_info(complex_)
        payload = {**complex_to_dict(complex_), "info": info}
        return CommandResult(command=self.id, payload=payload, rows=[info])
