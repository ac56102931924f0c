"""Command-line front end: solve, bench and oracle subcommands."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

import numpy as np

from . import bench, engine, instances, problems, recording, tsplib
from .engine import Mode, StaParams
from .errors import DstaError, TooLarge
from .operators import Operator

# TSPLIB-published optima (integer-rounded distance convention)
KNOWN_OPTIMA = {"kroA100": 21282, "kroC100": 20749, "gr96": 55209, "gr120": 6942}


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=["sta", "dsta"], default="dsta")
    p.add_argument("--se", type=int, default=32, help="neighbors sampled per operator round")
    p.add_argument("--ma", type=int, default=2, help="swap factor")
    p.add_argument("--mb", type=int, default=1, help="shift factor")
    p.add_argument("--mc", type=int, default=0, help="symmetry factor")
    p.add_argument("--md", type=int, default=1, help="substitute factor")
    p.add_argument("--p1", type=float, default=0.1459, help="restore probability (dsta)")
    p.add_argument("--p2", type=float, default=0.0557, help="risk probability (dsta)")
    p.add_argument("--iters", type=int, default=1500)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="base seed")
    p.add_argument("--rounding", choices=["real", "tsplib"], default="real")
    p.add_argument("--trace", metavar="PATH", help="write a convergence trace CSV")
    p.add_argument("--out", metavar="PATH", help="append JSON-lines result records")
    p.add_argument("--operators", metavar="LIST", help="comma-separated operator order")
    p.add_argument("-q", "--quiet", action="store_true")


def _params_from(args) -> StaParams:
    ops = None
    if args.operators:
        ops = tuple(Operator(tok.strip()) for tok in args.operators.split(","))
    params = StaParams(
        se=args.se,
        ma=args.ma,
        mb=args.mb,
        mc=args.mc,
        md=args.md,
        p1=args.p1,
        p2=args.p2,
        max_iters=args.iters,
        mode=Mode(args.mode),
        seed=args.seed,
        operator_set=ops,
    )
    params.validate()
    return params


def _build_problem(args):
    """Returns (engine problem, report function cost->shown value, reference or None)."""
    if args.problem == "rosenbrock":
        prob = problems.rosenbrock_problem(args.n)
        return prob, lambda c: c, 0.0
    if args.problem == "tsp":
        if args.file:
            inst = tsplib.load_instance(args.file, rounding=args.rounding)
        else:
            inst = instances.random_euclidean_tsp(args.n, args.instance_seed)
        ref = KNOWN_OPTIMA.get(inst.name.split(".")[0]) if args.file else None
        return problems.tsp_problem(inst), lambda c: c, ref
    if args.problem == "maxcut":
        if args.file:
            tsp = tsplib.load_instance(args.file, rounding=args.rounding)
            inst = instances.maxcut_from_tsp(tsp)
        else:
            inst = instances.random_weighted_graph(args.n, args.density, args.instance_seed)
        # engine minimizes the QUBO form; report the achieved cut weight
        return problems.maxcut_problem(inst), lambda c: problems.cut_from_qubo(c, inst), None
    raise DstaError(f"unknown problem {args.problem!r}")


def _echo_config(args, params: StaParams) -> None:
    if not args.quiet:
        cfg = recording.params_dict(params)
        cfg["trials"] = args.trials
        print("config:", json.dumps(cfg, sort_keys=True))


def cmd_solve(args) -> int:
    params = _params_from(args)
    problem, report, ref = _build_problem(args)
    _echo_config(args, params)
    stats, results = bench.run_trials(
        problem, params, args.trials, base_seed=args.seed, keep_results=True
    )
    best_trial = int(np.argmin([r.best_cost for r in results]))
    best = results[best_trial]
    shown = report(best.best_cost)
    print(f"instance: {problem.name}")
    print(f"best: {shown:.6f}")
    if args.trials > 1:
        print(f"mean: {np.mean([report(c) for c in stats.costs]):.6f}  std: {stats.std:.6f}")
    if problem.alphabet_size is None:
        print("tour:", " ".join(str(city + 1) for city in best.best_solution))
    else:
        print("solution:", " ".join(str(v) for v in best.best_solution))
    if ref is not None and ref > 0:
        print(f"error: {problems.tsp_error(shown, ref):+.2f}% vs reference {ref}")
    if args.trace:
        with open(args.trace, "w") as fh:
            recording.write_trace(best.trace, fh)
    if args.out:
        _append_records(args, params, problem, results)
    return 0


def _append_records(args, params, problem, results) -> None:
    records = [
        recording.ResultRecord(
            instance=problem.name,
            algorithm=params.mode.value,
            params=recording.params_dict(params),
            seed=bench.derive_seed(args.seed, i),
            best_cost=r.best_cost,
            wall_time=r.wall_time,
            best_solution=[int(v) for v in r.best_solution],
        )
        for i, r in enumerate(results)
    ]
    with open(args.out, "a") as fh:
        recording.write_results(records, fh)


ROSENBROCK_SUITE = [(5, 10), (10, 20), (20, 100), (50, 200), (100, 500), (200, 2000)]


def cmd_bench(args) -> int:
    params = _params_from(args)
    trials = args.trials
    _echo_config(args, params)
    rows = []
    if args.suite == "rosenbrock":
        cases = [(n, b) for n, b in ROSENBROCK_SUITE if n in set(args.sizes or [5, 10, 20, 50])]
        for n, budget in cases:
            prob = problems.rosenbrock_problem(n)
            for mode in (Mode.SIMPLE, Mode.DYNAMIC):
                p = replace(params, mode=mode, max_iters=budget)
                stats = bench.run_trials(prob, p, trials, base_seed=args.seed)
                rows.append((f"rosenbrock n={n}", mode.value, stats, stats.best))
    elif args.suite == "tsp":
        for path in args.files or []:
            inst = tsplib.load_instance(path, rounding=args.rounding)
            prob = problems.tsp_problem(inst)
            ref = KNOWN_OPTIMA.get(inst.name.split(".")[0])
            for mode in (Mode.SIMPLE, Mode.DYNAMIC):
                p = replace(params, mode=mode)
                stats = bench.run_trials(prob, p, trials, base_seed=args.seed)
                err = problems.tsp_error(stats.best, ref) if ref else None
                rows.append((inst.name, mode.value, stats, err))
    print(f"{'instance':<22}{'algorithm':<11}{'best':>14}{'mean':>14}{'std':>12}{'error':>9}")
    for name, mode, stats, err in rows:
        err_s = f"{err:.2f}%" if isinstance(err, float) else "-"
        print(f"{name:<22}{mode:<11}{stats.best:>14.4f}{stats.mean:>14.4f}{stats.std:>12.4f}{err_s:>9}")
    if args.out:
        with open(args.out, "a") as fh:
            recs = [
                recording.ResultRecord(
                    instance=name,
                    algorithm=mode,
                    params=recording.params_dict(params),
                    seed=args.seed,
                    best_cost=stats.best,
                    wall_time=0.0,
                )
                for name, mode, stats, _ in rows
            ]
            recording.write_results(recs, fh)
    return 0


def cmd_oracle(args) -> int:
    if args.problem == "rosenbrock":
        prob = problems.rosenbrock_problem(args.n)
        opt, best = bench.brute_force_dvs(prob)
        print(f"optimum: {opt:.6f}")
        print("solution:", " ".join(str(v) for v in problems.ROSENBROCK_ALPHABET[best]))
    elif args.problem == "tsp":
        inst = (
            tsplib.load_instance(args.file, rounding=args.rounding)
            if args.file
            else instances.random_euclidean_tsp(args.n, args.instance_seed)
        )
        opt, tour = bench.brute_force_tsp(inst)
        print(f"optimum: {opt:.6f}")
        print("tour:", " ".join(str(c + 1) for c in tour))
    elif args.problem == "maxcut":
        inst = instances.random_weighted_graph(args.n, args.density, args.instance_seed)
        q, c = inst.qubo
        opt, optimizers = bench.brute_force_qubo(q, c)
        print(f"optimum (qubo): {opt:.6f}")
        print(f"optimum (cut weight): {problems.cut_from_qubo(opt, inst):.6f}")
        print(f"optimizers: {len(optimizers)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dsta", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one instance")
    solve.add_argument("problem", choices=["tsp", "maxcut", "rosenbrock"])
    solve.add_argument("--file", help="TSPLIB instance path")
    solve.add_argument("--n", type=int, default=10, help="size for generated instances")
    solve.add_argument("--density", type=float, default=1.0)
    solve.add_argument("--instance-seed", type=int, default=0)
    _add_param_flags(solve)
    solve.set_defaults(func=cmd_solve)

    benchp = sub.add_parser("bench", help="run a benchmark suite")
    benchp.add_argument("suite", choices=["rosenbrock", "tsp"])
    benchp.add_argument("--files", nargs="*", help="TSPLIB paths for the tsp suite")
    benchp.add_argument("--sizes", nargs="*", type=int, help="rosenbrock dimensions")
    _add_param_flags(benchp)
    benchp.set_defaults(func=cmd_bench, trials=20)  # reference protocol default

    oracle = sub.add_parser("oracle", help="exact optimum by enumeration")
    oracle.add_argument("problem", choices=["tsp", "maxcut", "rosenbrock"])
    oracle.add_argument("--file", help="TSPLIB instance path")
    oracle.add_argument("--n", type=int, default=8)
    oracle.add_argument("--density", type=float, default=1.0)
    oracle.add_argument("--instance-seed", type=int, default=0)
    oracle.add_argument("--rounding", choices=["real", "tsplib"], default="real")
    oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: cannot read {exc.filename}", file=sys.stderr)
        return 1
    except DstaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
