from app.cli.parser import OdeArgumentParser
from app.utils.error_handler import handle_command_errors

__version__ = "0.1.0"


def create_app() -> OdeArgumentParser:
    parser = OdeArgumentParser(
        prog="odebench",
        description="Benchmark and run ODE integrations on interchangeable array backends.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    # Register commands here
    from .cli import cli_blueprint

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    cli_blueprint.register(subparsers)

    return parser


@handle_command_errors
def _dispatch(parser: OdeArgumentParser, argv: list[str] | None) -> int:
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help and --version exit through argparse
        return e.code if isinstance(e.code, int) else 0
    return args.handler(args)


def main(argv: list[str] | None = None) -> int:
    """Command line entry point; returns the process exit code."""
    return _dispatch(create_app(), argv)
