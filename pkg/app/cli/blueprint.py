from dataclasses import dataclass
from typing import Callable

from app.utils.error_handler import handle_command_errors


@dataclass(frozen=True)
class Command:
    name: str
    help: str
    add_arguments: Callable
    handler: Callable[..., int]


class CommandBlueprint:
    """Collects subcommands so the parser factory can register them in one place."""

    def __init__(self, name: str):
        self.name = name
        self.commands: dict[str, Command] = {}

    def command(self, name: str, help: str, arguments: Callable):
        """Register the decorated function as subcommand ``name``.

        ``arguments(parser)`` adds the subcommand's flags; the handler receives the
        parsed namespace and returns an exit code.
        """

        def decorator(func):
            handler = handle_command_errors(func)
            self.commands[name] = Command(name, help, arguments, handler)
            return handler

        return decorator

    def register(self, subparsers) -> None:
        for cmd in self.commands.values():
            parser = subparsers.add_parser(cmd.name, help=cmd.help, description=cmd.help)
            cmd.add_arguments(parser)
            parser.set_defaults(handler=cmd.handler)
