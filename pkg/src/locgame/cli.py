"""Command-line interface.

Subcommands: gen, zeta, beta, bounds, stats, verify, play, experiment.
Graph files are auto-detected by extension (.json, anything else is treated
as an edge list).  JSON reports encode unreachable/unbounded values as null.
Exit status is 0 exactly when the command's report is consistent or all its
checks pass.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .digraph import (
    INF,
    all_pairs_distances,
    diameter,
    read_digraph,
    to_edge_list,
    to_json,
)
from .experiment import ExperimentConfig, run_experiment, rows_to_csv
from .families import FamilySpec, FAMILIES
from .game import BudgetExceededError, localization_number_exact, optimal_robber, play
from .hypergraph import greedy_vertex_cover
from .resolve import (
    c_parameter,
    distinguisher_hypergraph,
    lp_upper_bound,
    metric_dimension_exact,
)
from .stats import doubly_regular_check, e4c_count, quasirandom_deviation, sameness
from .structure import localization_lower_bound, out_degeneracy, spread_m, strong_components
from .decomposition import DagDecomposition, PathDecomposition, read_decomposition
from .strategies import (
    dag_decomp_sweep,
    dag_sweep,
    path_sweep,
    rotation_strategy,
    sc_composite,
)
from .verify import CHECKS, run_checks


def _jsonable(value):
    if value == INF:
        return None
    if isinstance(value, float) and value.is_integer():
        return value
    return value


def _emit(data, out: str | None) -> None:
    text = json.dumps(data, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.family == "random":
        # accept the probability positionally (gen random 10 0.5) or via --p
        p = args.p
        raw = list(args.params)
        if len(raw) == 2 and p is None:
            p = float(raw.pop())
        if len(raw) != 1 or p is None:
            raise SystemExit("usage: gen random <n> [<p>] [--p <prob>] [--seed s]")
        spec = FamilySpec("random", (int(raw[0]),), p=p, seed=args.seed)
    elif args.family == "binary_source":
        if not args.base:
            raise SystemExit("gen binary_source needs --base <graph-file>")
        from .families import binary_source_extension

        g = binary_source_extension(read_digraph(args.base))
        _write(to_json(g) + "\n" if args.format == "json" else to_edge_list(g), args.out)
        return 0
    else:
        spec = FamilySpec(args.family, tuple(int(x) for x in args.params))
    g = spec.build()
    _write(to_json(g) + "\n" if args.format == "json" else to_edge_list(g), args.out)
    return 0


def cmd_zeta(args) -> int:
    g = read_digraph(args.graph)
    report: dict = {"n": g.n}
    try:
        zeta = localization_number_exact(g, k_max=args.max_cops)
    except BudgetExceededError as exc:
        report["zeta"] = None
        report["error"] = f"budget: {exc}"
        _emit(report, args.out)
        return 1
    report["zeta"] = zeta
    if zeta is None:
        report["exceeds"] = args.max_cops
    _emit(report, args.out)
    return 0 if zeta is not None else 1


def cmd_beta(args) -> int:
    g = read_digraph(args.graph)
    beta, witness = metric_dimension_exact(g)
    _emit({"n": g.n, "beta": beta, "witness": sorted(witness.vertices)}, args.out)
    return 0


def cmd_bounds(args) -> int:
    g = read_digraph(args.graph)
    dm = all_pairs_distances(g)
    report: dict = {"n": g.n}

    zeta = localization_number_exact(g, k_max=args.max_cops, dm=dm)
    beta, _ = metric_dimension_exact(g, dm)
    lower_dt = localization_lower_bound(g, dm)
    upper_lp = lp_upper_bound(g, dm)

    scc = strong_components(g)
    comp_zetas = []
    for comp in scc.components:
        sub, _ = g.induced(comp)
        comp_zetas.append(localization_number_exact(sub))
    delta = max((scc.condensation.out_degree(i) for i in range(len(scc))), default=0)
    upper_sc = max(comp_zetas) + delta

    report.update(
        {
            "zeta": zeta,
            "beta": beta,
            "lower_dt": lower_dt,
            "upper_lp": _jsonable(upper_lp),
            "upper_sc": upper_sc,
            "spread": _jsonable(spread_m(g, dm)),
            "out_degeneracy": out_degeneracy(g),
        }
    )
    consistent = (
        zeta is not None
        and lower_dt <= zeta <= beta <= min(upper_lp, g.n)
        and zeta <= upper_sc
    )
    report["consistent"] = consistent
    _emit(report, args.out)
    return 0 if consistent else 1


def cmd_stats(args) -> int:
    g = read_digraph(args.graph)
    dm = all_pairs_distances(g)
    report: dict = {
        "n": g.n,
        "arcs": g.arc_count,
        "tournament": g.is_tournament(),
        "diameter": _jsonable(diameter(g, dm)),
        "c_parameter": float(c_parameter(g, dm)),
        "beta_greedy": len(greedy_vertex_cover(distinguisher_hypergraph(g, dm))),
    }
    # the separation rate under the reversed distance convention, when it
    # disagrees with the default witness-to-pair reading
    c_reverse = c_parameter(g, dm, direction="pair-to-witness")
    if c_reverse != c_parameter(g, dm):
        report["c_parameter_pair_to_witness"] = float(c_reverse)
    if g.is_tournament():
        s_values = [
            sameness(g, u, v).s for u in range(g.n) for v in range(u + 1, g.n)
        ]
        report.update(
            {
                "doubly_regular": doubly_regular_check(g),
                "s_min": min(s_values),
                "s_max": max(s_values),
                "e4c": e4c_count(g),
                "e4c_ratio": e4c_count(g) / (g.n ** 4 / 2),
                "sameness_deviation": quasirandom_deviation(g),
            }
        )
    _emit(report, args.out)
    return 0


def cmd_verify(args) -> int:
    ids = sorted(CHECKS) if args.checks == ["all"] else args.checks
    results = run_checks(ids)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 0 if not failed else 1


def cmd_play(args) -> int:
    g = read_digraph(args.graph)
    if args.strategy == "dag_sweep":
        strategy = dag_sweep(g)
    elif args.strategy == "sc_composite":
        strategy = sc_composite(g)
    elif args.strategy == "rotation":
        if g.n % 2 == 0:
            raise SystemExit("rotation strategy needs an odd vertex count")
        strategy = rotation_strategy((g.n - 1) // 2, cops=args.cops)
    elif args.strategy in ("path_sweep", "dag_decomp_sweep"):
        if not args.decomposition:
            raise SystemExit(f"{args.strategy} needs --decomposition <file>")
        decomp = read_decomposition(args.decomposition)
        if args.strategy == "path_sweep":
            if not isinstance(decomp, PathDecomposition):
                raise SystemExit("path_sweep needs a path decomposition file")
            strategy = path_sweep(g, decomp)
        else:
            if not isinstance(decomp, DagDecomposition):
                raise SystemExit("dag_decomp_sweep needs a DAG decomposition file")
            strategy = dag_decomp_sweep(g, decomp)
    else:
        raise SystemExit(f"unknown strategy {args.strategy!r}")

    robber = optimal_robber(g, strategy.cops)
    max_rounds = args.max_rounds or 5 * g.n
    transcript = play(g, strategy, robber, max_rounds=max_rounds)
    _write(transcript.to_json_lines(), args.out)
    return 0 if transcript.outcome.captured else 1


def cmd_experiment(args) -> int:
    config = ExperimentConfig(
        sizes=tuple(args.n),
        p=args.p,
        trials=args.trials,
        seed=args.seed,
        eps=args.eps,
    )
    rows = run_experiment(config)
    _write(rows_to_csv(rows), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locgame",
        description="Localization game on digraphs: generators, exact solvers, "
        "bounds, strategies, and experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family instance")
    p.add_argument("family", choices=sorted(FAMILIES) + ["random", "binary_source"])
    p.add_argument("params", nargs="*", help="integer family parameters")
    p.add_argument("--p", type=float, help="arc probability (random family)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--base", help="base graph file (binary_source family)")
    p.add_argument("--format", choices=["edgelist", "json"], default="edgelist")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    for name, func, extra in (
        ("zeta", cmd_zeta, True),
        ("beta", cmd_beta, False),
        ("bounds", cmd_bounds, True),
        ("stats", cmd_stats, False),
    ):
        p = sub.add_parser(name, help=f"compute the {name} report")
        p.add_argument("graph")
        if extra:
            p.add_argument("--max-cops", type=int, default=None)
        p.add_argument("--out")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run named verification suites")
    p.add_argument("checks", nargs="+", help=f"check ids or 'all'; known: {sorted(CHECKS)}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("play", help="run a cop strategy against the exact robber")
    p.add_argument("graph")
    p.add_argument(
        "--strategy",
        required=True,
        choices=["dag_sweep", "sc_composite", "path_sweep", "dag_decomp_sweep", "rotation"],
    )
    p.add_argument("--decomposition", help="decomposition JSON (sweep strategies)")
    p.add_argument("--cops", type=int, default=None, help="override the cop budget (rotation)")
    p.add_argument("--max-rounds", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("experiment", help="seeded random-tournament CSV experiment")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
