"""
Pluggable command framework behind the ``inducedym`` CLI.

Each subcommand runs exactly one computation and returns a CommandResult
that the CLI writes as JSON or CSV.

To add a new command:
1. Create a new file in this package (e.g., my_command.py)
2. Define a class inheriting from BaseCommand
3. Decorate it with @command for auto-registration

Example:
    from .base import BaseCommand, CommandResult, RunConfig
    from .registry import command

    @command
    class MyCommand(BaseCommand):
        id = "mine"
        description = "What it computes"

        def add_arguments(self, parser):
            parser.add_argument("--nc", dest="n_c", type=int)

        def run(self, config: RunConfig) -> CommandResult:
            return CommandResult(command=self.id, payload={...})
"""

from .base import BaseCommand, CommandResult, OutputFormat, RunConfig
from .registry import CommandRegistry, command

# Import all commands to trigger @command decorator registration
from . import repn
from . import coefficients
from . import surfaces
from . import complexes
from . import duality
from . import sampling
from . import fock

__all__ = [
    "BaseCommand",
    "CommandResult",
    "OutputFormat",
    "RunConfig",
    "CommandRegistry",
    "command",
]
