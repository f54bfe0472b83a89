"""Command registry for auto-discovery and dispatch."""

from typing import Type

from ..errors import InvalidInput
from ..logging import get_logger
from .base import BaseCommand, CommandResult, RunConfig

logger = get_logger(__name__)


class CommandRegistry:
    """
    Central registry for all CLI subcommands.

    Commands are auto-registered using the @command decorator.
    """

    _commands: dict[str, BaseCommand] = {}

    @classmethod
    def register(cls, command_instance: BaseCommand) -> None:
        """Register a command instance."""
        if not command_instance.id:
            raise ValueError(f"Command {command_instance.__class__.__name__} has no id")
        cls._commands[command_instance.id] = command_instance

    @classmethod
    def get(cls, command_id: str) -> BaseCommand | None:
        return cls._commands.get(command_id)

    @classmethod
    def all(cls) -> list[BaseCommand]:
        return list(cls._commands.values())

    @classmethod
    def dispatch(cls, config: RunConfig) -> CommandResult:
        """
        Run the command named by the config.

        Raises:
            InvalidInput: if the command is unknown
            InducedError: whatever the computation raises
        """
        cmd = cls.get(config.command)
        if cmd is None:
            raise InvalidInput(f"unknown command '{config.command}'", module="cli")
        logger.info("Running %s", cmd.id)
        result = cmd.run(config)
        logger.info("Finished %s", cmd.id)
        return result


def command(cls: Type[BaseCommand]) -> Type[BaseCommand]:
    """
    Decorator to auto-register a command class.

    Usage:
        @command
        class ZgCommand(BaseCommand):
            id = "zg"
            ...
    """
    instance = cls()
    CommandRegistry.register(instance)
    return cls
