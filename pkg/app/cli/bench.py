import sys

from app.bench import expand_configs, load_config_file, run_benchmark, write_csv
from app.bench.report import render_table
from app.cli import cli_blueprint
from app.cli.parser import int_list, name_list, non_negative_int, positive_int
from app.utils.cli_response import cliResponse
from app.utils.errors import UsageError
from app.utils.logger import logger

# flag dest -> BenchConfig field
_FLAG_FIELDS = {
    "system": "system",
    "backend": "backend",
    "sizes": "sizes",
    "steps": "steps",
    "reps": "repetitions",
    "dt": "dt",
    "seed": "seed",
    "workers": "workers",
    "peak_gbps": "peak_gbps",
    "warmup": "warmup",
    "stepper": "stepper",
}


def add_bench_arguments(parser):
    parser.add_argument("--config", metavar="FILE", help="JSON file with benchmark settings")
    parser.add_argument(
        "--system", type=name_list, help="system id(s), comma separated: lorenz, phase, lattice"
    )
    parser.add_argument(
        "--backend", type=name_list, help="backend id(s), comma separated: serial, parallel, fused"
    )
    parser.add_argument("--sizes", type=int_list, help="problem sizes, e.g. 100,1000,10000")
    parser.add_argument("--steps", type=int, help="integration steps per timed run")
    parser.add_argument("--reps", type=int, help="timed repetitions per size (median is reported)")
    parser.add_argument("--dt", type=float, help="step size")
    parser.add_argument("--seed", type=int, help="seed for random parameters and disorder")
    parser.add_argument(
        "--workers", type=positive_int, help="worker threads for the parallel backend"
    )
    parser.add_argument(
        "--peak-gbps", type=float, help="machine peak memory bandwidth for the %% peak column"
    )
    parser.add_argument("--warmup", type=non_negative_int, help="untimed runs before timing")
    parser.add_argument("--stepper", help="stepper name (default depends on the system)")
    parser.add_argument("--out", metavar="FILE", help="write the CSV here instead of stdout")
    parser.add_argument(
        "--table", action="store_true", help="print an aligned results table to stdout"
    )


def _settings(args) -> dict:
    settings = load_config_file(args.config) if args.config else {}
    for dest, key in _FLAG_FIELDS.items():
        value = getattr(args, dest)
        if value is not None:
            settings[key] = value
    for key in ("system", "backend"):
        if key not in settings:
            raise UsageError(f"bench: --{key} is required (or set it in --config)")
    return settings


@cli_blueprint.command(
    "bench", help="time integrations over a sweep of sizes", arguments=add_bench_arguments
)
def cmd_bench(args) -> int:
    configs = expand_configs(_settings(args))

    records = []
    for config in configs:
        logger.info(f"benchmark {config.system} on {config.backend}, sizes {config.sizes}")
        records.extend(run_benchmark(config))

    if args.out:
        with open(args.out, "w", newline="") as f:
            write_csv(records, f)
    if args.table:
        sys.stdout.write(render_table(records))
    elif not args.out:
        write_csv(records, sys.stdout)

    failed = sum(1 for r in records if r.failed)
    return cliResponse(
        status="success",
        message="benchmark finished",
        payload={"records": len(records) - failed, "failed": failed},
    )
