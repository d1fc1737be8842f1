import csv
import sys
from contextlib import nullcontext

from app.backends import BACKENDS, make_algebra
from app.cli import cli_blueprint
from app.cli.parser import float_pair, non_negative_int, positive_int
from app.core.state import check_finite
from app.steppers import integrate_n_steps
from app.systems import lattice
from app.systems.problems import SYSTEMS, make_problem
from app.utils.cli_response import cliResponse
from app.utils.logger import run_context


def add_simulate_arguments(parser):
    parser.add_argument("--system", required=True, choices=SYSTEMS, help="system to integrate")
    parser.add_argument("--backend", default="serial", choices=BACKENDS, help="algebra backend")
    parser.add_argument(
        "--size",
        "-N",
        type=positive_int,
        default=1000,
        help="ensemble members, oscillators or lattice nodes",
    )
    parser.add_argument("--dt", type=float, default=0.01, help="step size")
    parser.add_argument("--steps", type=non_negative_int, default=100, help="steps to integrate")
    parser.add_argument(
        "--observe-every", type=positive_int, default=1, help="write a row every K steps"
    )
    parser.add_argument("--seed", type=int, default=42, help="seed for random parameters")
    parser.add_argument(
        "--limit", type=positive_int, default=10, help="number of state entries per row"
    )
    parser.add_argument("--out", metavar="FILE", help="write the trajectory here instead of stdout")
    parser.add_argument("--stepper", help="stepper name (default depends on the system)")
    parser.add_argument(
        "--workers", type=positive_int, help="worker threads for the parallel backend"
    )
    parser.add_argument("--rayleigh", type=float, help="lorenz: one R for every member")
    parser.add_argument(
        "--omega", type=float, help="phase: one natural frequency for every oscillator"
    )
    parser.add_argument("--phi0", type=float, help="phase: one initial phase for every oscillator")
    parser.add_argument(
        "--beta", type=float, default=lattice.DEFAULT_BETA, help="lattice: quartic coefficient"
    )
    parser.add_argument(
        "--disorder",
        type=float_pair,
        default=lattice.DEFAULT_DISORDER,
        metavar="LO,HI",
        help="lattice: range of the on-site frequencies squared",
    )


def _fmt(value: float) -> str:
    return f"{value:.17g}"


@cli_blueprint.command(
    "simulate",
    help="integrate one system and write its trajectory",
    arguments=add_simulate_arguments,
)
def cmd_simulate(args) -> int:
    algebra = make_algebra(args.backend, args.workers)
    try:
        problem = make_problem(
            args.system,
            args.size,
            algebra,
            seed=args.seed,
            stepper=args.stepper,
            rayleigh=args.rayleigh,
            omega=args.omega,
            phi0=args.phi0,
            beta=args.beta,
            disorder=args.disorder,
        )
        state = problem.fresh_state()
        width = min(args.limit, problem.observed(state).size)

        sink = open(args.out, "w", newline="") if args.out else nullcontext(sys.stdout)
        with sink as f, run_context(args.system, args.backend, problem.n):
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["t"] + [f"x{i}" for i in range(width)])

            def write_row(current, t: float) -> None:
                writer.writerow([_fmt(t)] + [_fmt(v) for v in problem.observed(current)[:width]])

            step = 0

            def observer(current, t: float) -> None:
                nonlocal step
                step += 1
                check_finite(problem.observed(current))
                if step % args.observe_every == 0:
                    write_row(current, t)

            check_finite(problem.observed(state))
            write_row(state, 0.0)
            integrate_n_steps(
                problem.stepper, problem.system, state, 0.0, args.dt, args.steps, observer
            )
    finally:
        algebra.close()

    return cliResponse(
        status="success",
        message="simulation finished",
        payload={"system": args.system, "N": problem.n, "steps": args.steps},
    )
