"""Command line experiment runner.

    qrcc solve  --generate planted --n 512 --p 0.25 --planted-k 20 --k 20 --alg rcc2 --q 64 --restarts 20
    qrcc oracle --input k5.txt --k 3
    qrcc sweep  --generate erdos --n 1024 --p 0.5 --k 30 --alg rcc1 --q-list 2,50,100 --iters-list 500,1000

Exit codes: 0 success, 2 invalid input or flags, 3 oracle guard exceeded.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import asdict

import numpy as np

from . import report
from .graph import Graph, GeneratorSpec, GraphFormatError, generate, load_edge_list, load_kcluster
from .oracle import OracleTooLarge, exhaustive_dks
from .solver import SolverConfig, run
from .subproblem import SubproblemInfeasible

log = logging.getLogger("qrcc")

EXIT_OK, EXIT_INPUT, EXIT_GUARD = 0, 2, 3

Q_HELP = ("coordinates updated per iteration (2 <= q <= n); "
          "between 10%% and 20%% of the vertex count is a good starting point")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("list must not be empty")
    return vals


def _add_instance_args(p: argparse.ArgumentParser):
    g = p.add_argument_group("instance")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="edge list or k-cluster matrix file")
    src.add_argument("--generate", choices=["erdos", "planted"], help="sample a random instance")
    g.add_argument("--format", choices=["edgelist", "kcluster"], default="edgelist", help="format of --input")
    g.add_argument("--n", type=int, help="vertices of the generated graph")
    g.add_argument("--p", type=float, help="edge probability of the generated graph")
    g.add_argument("--planted-k", type=int, help="size of the planted clique")
    g.add_argument("--graph-seed", type=int, help="generator seed (defaults to --seed)")


def _add_solver_args(p: argparse.ArgumentParser, sweep: bool = False):
    s = p.add_argument_group("solver")
    s.add_argument("--k", type=int, required=True, help="subgraph size, 3 <= k <= n-2")
    s.add_argument("--alg", choices=["rcc1", "rcc2"], default="rcc2")
    if not sweep:
        s.add_argument("--q", type=int, default=None, help=Q_HELP + " (default: 10%% of n)")
        s.add_argument("--iters", type=int, default=1000, help="iteration budget per restart")
    s.add_argument("--restarts", type=int, default=1, help="maximum number of restarts")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--init", choices=["random", "uniform"], default=None,
                   help="starting point; default random up to 2^13 vertices, uniform above")
    s.add_argument("--weights", default="degree", metavar="{degree|sqrt|const:V}",
                   help="proximal weights for rcc1")
    s.add_argument("--int-tol", type=float, default=1e-6)
    s.add_argument("--obj-tol", type=float, default=1e-7)
    s.add_argument("--stall-window", type=int, default=None,
                   help="iterations between objective comparisons for rcc1 (default ceil(n/q))")


def _add_output_args(p: argparse.ArgumentParser, default_out: str):
    o = p.add_argument_group("output")
    o.add_argument("--out", choices=["json", "csv"], default=default_out)
    o.add_argument("--out-path", metavar="PATH", help="write the report here instead of stdout")
    o.add_argument("--no-timing", action="store_true",
                   help="leave wall times out of the report (byte-reproducible output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qrcc", description="Densest k-subgraph by q-random coordinate descent.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run the solver on one instance")
    _add_instance_args(p)
    _add_solver_args(p)
    p.add_argument("--reps", type=int, default=1, help="repetitions; repetition i uses seed + i")
    _add_output_args(p, "json")

    p = sub.add_parser("oracle", help="exact optimum by exhaustive enumeration (small instances)")
    _add_instance_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("sweep", help="grid of (q, iterations) runs on one instance")
    _add_instance_args(p)
    _add_solver_args(p, sweep=True)
    p.add_argument("--q-list", type=_int_list, required=True)
    p.add_argument("--iters-list", type=_int_list, required=True)
    _add_output_args(p, "csv")
    return parser


def load_instance(args) -> Graph:
    if args.input:
        try:
            with open(args.input) as fh:
                name = os.path.basename(args.input)
                if args.format == "kcluster":
                    return load_kcluster(fh, name=name)
                return load_edge_list(fh, name=name)
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    if args.n is None or args.p is None:
        raise UsageError("--generate needs --n and --p")
    kind = "planted" if args.generate == "planted" else "erdos_renyi"
    if kind == "planted" and args.planted_k is None:
        raise UsageError("--generate planted needs --planted-k")
    seed = args.graph_seed if args.graph_seed is not None else args.seed
    return generate(GeneratorSpec(kind, args.n, args.p, args.planted_k, seed))


def _weights(text: str) -> tuple[str, float]:
    if text in ("degree", "sqrt"):
        return ("degree" if text == "degree" else "sqrt_degree"), 1.0
    if text.startswith("const:"):
        try:
            value = float(text.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad constant weight {text!r}") from None
        if value <= 0:
            raise UsageError("constant weight must be positive")
        return "constant", value
    raise UsageError(f"--weights must be degree, sqrt or const:V, got {text!r}")


def make_config(args, g: Graph, q: int | None = None, iters: int | None = None, seed: int | None = None) -> SolverConfig:
    mode, value = _weights(args.weights)
    init = {"random": "random_simplex", "uniform": "uniform_k_over_n", None: None}[args.init]
    if q is None:
        q = args.q if args.q is not None else max(2, min(g.n, round(0.1 * g.n)))
    cfg = SolverConfig(
        algorithm=args.alg, k=args.k, q=q,
        max_iters=args.iters if iters is None else iters,
        max_restarts=args.restarts, obj_tol=args.obj_tol, int_tol=args.int_tol,
        stall_window=args.stall_window,
        seed=args.seed if seed is None else seed,
        init=init, weight_mode=mode, weight_value=value,
    )
    try:
        cfg.validate(g.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return cfg


def _row(g: Graph, cfg: SolverConfig, rep, timing: bool) -> dict:
    best_term = rep.termination[rep.best_restart] if rep.best_restart is not None else ""
    return {
        "instance": g.name, "n": g.n, "m": g.m, "k": cfg.k, "alg": cfg.algorithm, "q": cfg.q,
        "iters": cfg.max_iters, "restarts": cfg.max_restarts, "seed": cfg.seed,
        "bound": rep.best_bound, "integer_value": rep.best_integer_value,
        "certified": rep.is_clique_certified,
        "time_s": rep.wall_time_seconds if timing else None,
        "termination": best_term,
    }


def _emit(args, write):
    if args.out_path:
        with open(args.out_path, "w", newline="") as fh:
            write(fh)
    else:
        write(sys.stdout)


def cmd_solve(args) -> int:
    g = load_instance(args)
    timing = not args.no_timing
    if args.reps < 1:
        raise UsageError("--reps must be at least 1")
    rows, runs = [], []
    for i in range(args.reps):
        cfg = make_config(args, g, seed=args.seed + i)
        rep = run(g, cfg)
        rows.append(_row(g, cfg, rep, timing))
        labels = None if rep.best_vertex_set is None else [g.original_label(v) for v in rep.best_vertex_set]
        runs.append({
            "repetition": i, "config": asdict(cfg),
            "best_bound": rep.best_bound, "best_integer_value": rep.best_integer_value,
            "edges": None if rep.best_integer_value is None else int(rep.best_integer_value) // 2,
            "best_vertex_set": labels, "is_clique_certified": rep.is_clique_certified,
            "iterations_total": rep.iterations_total, "restarts_used": rep.restarts_used,
            "termination": rep.termination,
            "wall_time_seconds": rep.wall_time_seconds if timing else None,
        })
        log.info("rep %d: bound %.4f integer %s certified %s", i, rep.best_bound,
                 rep.best_integer_value, rep.is_clique_certified)

    ints = [r["integer_value"] for r in rows if r["integer_value"] is not None]
    summary = {
        "best_bound": max(r["bound"] for r in rows),
        "mean_bound": float(np.mean([r["bound"] for r in rows])),
        "best_integer_value": max(ints) if ints else None,
        "mean_integer_value": float(np.mean(ints)) if ints else None,
        "certified_runs": sum(r["certified"] for r in rows),
        "mean_time_s": float(np.mean([r["time_s"] for r in rows])) if timing else None,
    }
    if args.out == "csv":
        agg = dict(rows[0], seed=args.seed, bound=summary["best_bound"],
                   integer_value=summary["best_integer_value"],
                   certified=summary["certified_runs"] > 0, time_s=summary["mean_time_s"],
                   termination="aggregate")
        _emit(args, lambda fh: report.write_csv(rows + [agg], fh))
    else:
        doc = {"instance": {"name": g.name, "n": g.n, "m": g.m, "planted": g.planted},
               "runs": runs, "summary": summary}
        _emit(args, lambda fh: report.write_json(doc, fh))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = load_instance(args)
    try:
        res = exhaustive_dks(g, args.k)
    except OracleTooLarge as exc:
        print(f"qrcc: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(res.optimum)
    print(" ".join(str(g.original_label(v)) for v in res.argmax_set))
    return EXIT_OK


def cmd_sweep(args) -> int:
    g = load_instance(args)
    timing = not args.no_timing
    rows = []
    for q in args.q_list:
        for iters in args.iters_list:
            cfg = make_config(args, g, q=q, iters=iters)
            rows.append(_row(g, cfg, run(g, cfg), timing))
    if args.out == "csv":
        _emit(args, lambda fh: report.write_csv(rows, fh))
    else:
        _emit(args, lambda fh: report.write_json({"rows": rows}, fh))
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "oracle": cmd_oracle, "sweep": cmd_sweep}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GraphFormatError, SubproblemInfeasible, ValueError) as exc:
        print(f"qrcc: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
