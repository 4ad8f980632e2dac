import argparse
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], int]


@dataclass(frozen=True)
class Argument:
    flags: Tuple[str, ...]
    options: Dict[str, Any] = field(default_factory=dict)


def arg(*flags: str, **options) -> Argument:
    return Argument(flags, options)


@dataclass(frozen=True)
class Command:
    name: str
    help: str
    arguments: Tuple[Argument, ...]
    handler: Handler
    formats: Tuple[str, ...]


class Router:
    """Collects subcommands of one handler module."""

    def __init__(self):
        self.commands: List[Command] = []

    def command(self, name: str, help: str, arguments: Sequence[Argument] = (),
                formats: Sequence[str] = ("text", "json")):
        def decorator(func: Handler) -> Handler:
            self.commands.append(Command(name, help, tuple(arguments), func, tuple(formats)))
            return func

        return decorator


class Dispatcher:
    """Builds one argparse parser out of the included routers and runs the selected handler."""

    def __init__(self, prog: str = "fmzv"):
        self.parser = argparse.ArgumentParser(prog=prog, description="Exact computations with formal multiple zeta values")
        self.parser.add_argument("-q", "--quiet", action="store_true", help="log warnings and errors only")
        self.subparsers = self.parser.add_subparsers(dest="command", metavar="command")
        self.subparsers.required = True
        self.handlers: Dict[str, Handler] = {}

    def include_router(self, router: Router):
        for command in router.commands:
            sub = self.subparsers.add_parser(command.name, help=command.help)
            for argument in command.arguments:
                sub.add_argument(*argument.flags, **argument.options)

            sub.add_argument("--format", choices=command.formats, default="text", help="output format")
            sub.add_argument("--json", dest="format", action="store_const", const="json",
                             help="alias for --format json")
            self.handlers[command.name] = command.handler

    def include_routers(self, *routers: Router):
        for router in routers:
            self.include_router(router)

    def parse(self, argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
        return self.parser.parse_args(argv)

    def dispatch(self, args: argparse.Namespace) -> int:
        return self.handlers[args.command](args)
