from app.bench.report import read_csv
from app.cli import cli_blueprint
from app.utils.cli_response import cliResponse
from app.utils.errors import CsvFormatError


def add_plot_arguments(parser):
    parser.add_argument("csv", help="benchmark CSV written by the bench command")
    parser.add_argument("--out", required=True, metavar="FILE", help="SVG file to write")
    parser.add_argument(
        "--reference", default="serial", help="backend the relative panel divides by"
    )


@cli_blueprint.command(
    "plot", help="draw run time and relative performance as SVG", arguments=add_plot_arguments
)
def cmd_plot(args) -> int:
    records = read_csv(args.csv)
    if not records:
        raise CsvFormatError(f"{args.csv} holds no benchmark records", line=2)

    # matplotlib is only imported for this command
    from app.bench.plot import plot_records

    plot_records(records, args.out, reference_backend=args.reference)
    return cliResponse(
        status="success", message="plot written", payload={"out": args.out, "records": len(records)}
    )
