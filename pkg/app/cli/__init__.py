from app.cli.blueprint import CommandBlueprint

cli_blueprint = CommandBlueprint("odebench")
from . import bench  # noqa: E402, F401
from . import simulate  # noqa: E402, F401
from . import plot  # noqa: E402, F401
