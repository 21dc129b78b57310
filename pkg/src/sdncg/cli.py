"""Command-line front door.

Each subcommand is a thin adapter onto one library operation. The input
graph doubles as the host; state-evaluating commands treat it as the state
that activates every host edge. Exit status: 0 on success, 1 on domain
errors (no equilibrium, exceeded budgets, failed certificates), 2 on usage
errors (bad flags, malformed files, infeasible parameters).
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from fractions import Fraction
from multiprocessing import Pool

from . import analysis, constructions, game, graphio, spanning
from .errors import (
    BudgetExceededError,
    CertificateError,
    GraphParseError,
    NoEquilibriumError,
    ParameterError,
    SdncgError,
    StructureError,
)
from .graphs import HostGraph, full_state

_USAGE_ERRORS = (GraphParseError, ParameterError, StructureError)
_DOMAIN_ERRORS = (BudgetExceededError, NoEquilibriumError, CertificateError)


def _out(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_host(args):
    return graphio.load_graph(args.input)


def _alpha(args):
    return game.parse_alpha(args.alpha)


def _fmt(x):
    return analysis.format_exact(x)


def _cmd_gen(args):
    spec = constructions.ConstructionSpec(
        family=args.family,
        n=args.n,
        d=args.d,
        k=args.k,
        c=args.c,
        alpha=game.parse_alpha(args.alpha) if args.alpha else None,
        base=graphio.load_graph(args.input) if args.input else None,
        sizes=tuple(int(s) for s in args.sizes.split(",")) if args.sizes else None,
    )
    g = constructions.build_construction(spec)
    text = graphio.dump_json(g) if args.format == "json" else graphio.dump_text(g)
    _out(args, text)
    return 0


def _cmd_sw(args):
    host = _load_host(args)
    value = game.social_welfare(full_state(host), _alpha(args))
    _out(args, _fmt(value) + "\n")
    return 0


def _cmd_stable(args):
    host = _load_host(args)
    report = game.is_pairwise_stable(full_state(host), _alpha(args))
    if args.format == "json":
        payload = {
            "stable": report.stable,
            "stable_against_addition": report.stable_against_addition,
            "stable_against_removal": report.stable_against_removal,
            "witnesses": [str(m) for m in report.witnesses],
            "moves_examined": report.moves_examined,
        }
        _out(args, json.dumps(payload) + "\n")
    else:
        _out(args, ("stable" if report.stable else "unstable") + "\n")
    return 0


def _cmd_dynamics(args):
    host = _load_host(args)
    if args.policy == "random" and args.seed is None:
        raise ParameterError("--policy random requires --seed")
    outcome = game.run_dynamics(
        full_state(host), _alpha(args), policy=args.policy, budget=args.budget, seed=args.seed
    )
    lines = []
    if args.policy == "random":
        lines.append(f"# seed: {args.seed}")
    if args.format == "json":
        payload = {
            "terminal": outcome.terminal,
            "steps": outcome.steps,
            "cycle_start": outcome.cycle_start,
            "moves": [str(mv) for _, mv in outcome.trajectory],
            "final_edges": sorted(outcome.final_state.active),
        }
        lines.append(json.dumps(payload))
    else:
        lines.append(f"terminal: {outcome.terminal}")
        lines.append(f"steps: {outcome.steps}")
        if outcome.cycle_start is not None:
            lines.append(f"cycle_start: {outcome.cycle_start}")
    _out(args, "\n".join(lines) + "\n")
    return 0


def _tree_payload(scaffold, extra):
    tree = scaffold.tree
    payload = {
        "n": tree.host.n,
        "edges": [list(e) for e in sorted(tree.active)],
        "routing_cost": scaffold.total,
    }
    payload.update(extra)
    return payload


def _emit_tree(args, scaffold, extra):
    if args.format == "json":
        _out(args, json.dumps(_tree_payload(scaffold, extra)) + "\n")
    else:
        _out(args, graphio.dump_text(HostGraph(scaffold.tree.host.n, scaffold.tree.active)))


def _cmd_smrcst(args):
    host = _load_host(args)
    pivot = {"best": "best", "first": "first"}[args.policy or "best"]
    result = spanning.smrcst(host, pivot)
    _emit_tree(
        args,
        result.tree,
        {
            "iterations": result.iterations,
            "seed_path_length": result.seed_path_length,
        },
    )
    return 0


def _cmd_mrcst(args):
    host = _load_host(args)
    scaffold = spanning.mrcst_exact(host, args.budget)
    _emit_tree(args, scaffold, {})
    return 0


def _cmd_opt(args):
    host = _load_host(args)
    result = analysis.optimum_exact(host, _alpha(args), args.budget)
    if args.format == "json":
        payload = {
            "welfare": _fmt(result.welfare),
            "optima": len(result.best_states),
            "states_examined": result.states_examined,
            "best_edges": [sorted(st.active) for st in result.best_states],
        }
        _out(args, json.dumps(payload) + "\n")
    else:
        _out(args, _fmt(result.welfare) + "\n")
    return 0


def _cmd_atlas(args):
    host = _load_host(args)
    atlas = analysis.enumerate_stable_states(host, _alpha(args), args.budget)
    if args.format == "json":
        payload = {
            "stable_count": atlas.stable_count,
            "sw_worst_stable": _fmt(atlas.worst_welfare),
            "sw_best_stable": _fmt(atlas.best_welfare),
            "states_examined": atlas.states_examined,
            "stable_edges": [sorted(st.active) for st in atlas.stable_states],
        }
        _out(args, json.dumps(payload) + "\n")
    else:
        lines = [
            f"stable_count: {atlas.stable_count}",
            f"sw_worst_stable: {_fmt(atlas.worst_welfare)}",
            f"sw_best_stable: {_fmt(atlas.best_welfare)}",
        ]
        _out(args, "\n".join(lines) + "\n")
    return 0


def _cmd_poa(args):
    host = _load_host(args)
    _out(args, _fmt(analysis.poa_exact(host, _alpha(args), args.budget)) + "\n")
    return 0


def _cmd_cycle(args):
    if args.seed is None:
        raise ParameterError("cycle requires --seed")
    outcome = analysis.find_improving_cycle(
        args.n, _alpha(args), search_budget=args.budget, seed=args.seed
    )
    lines = [f"# seed: {args.seed}"]
    if args.format == "json":
        if outcome is None:
            lines.append(json.dumps({"found": False}))
        else:
            lines.append(
                json.dumps(
                    {
                        "found": True,
                        "steps": outcome.steps,
                        "cycle_start": outcome.cycle_start,
                        "moves": [str(mv) for _, mv in outcome.trajectory],
                    }
                )
            )
    elif outcome is None:
        lines.append("cycle: not-found")
    else:
        lines.append("cycle: found")
        lines.append(f"steps: {outcome.steps}")
        lines.append(f"cycle_start: {outcome.cycle_start}")
        lines.append(f"length: {outcome.steps - outcome.cycle_start}")
        for _, mv in outcome.trajectory[outcome.cycle_start :]:
            lines.append(str(mv))
    _out(args, "\n".join(lines) + "\n")
    return 0


def _sweep_cell_task(task):
    n, edges, num, den, budget = task
    return analysis.sweep_cell(HostGraph(n, edges), Fraction(num, den), budget)


def _cmd_sweep(args):
    alphas = [game.parse_alpha(s) for s in args.alpha.split(",")]
    if args.input:
        hosts = [graphio.load_graph(p) for p in args.input]
    else:
        if args.seed is None:
            raise ParameterError("random sweep requires --seed (or pass --input files)")
        hosts = analysis.host_corpus(
            args.count,
            (args.n_min, args.n_max),
            (0.1, 0.45),
            args.seed,
            max_edges=args.max_edges,
        )
        print(f"# seed: {args.seed}", file=sys.stderr)
    tasks = [
        (h.n, h.edges, a.numerator, a.denominator, args.budget)
        for h in hosts
        for a in alphas
    ]
    if args.workers > 1:
        with Pool(args.workers) as pool:
            rows = pool.map(_sweep_cell_task, tasks)
    else:
        rows = [_sweep_cell_task(t) for t in tasks]
    buf = io.StringIO()
    analysis.write_sweep_csv(rows, buf)
    _out(args, buf.getvalue())
    return 0


def _cmd_campaign(args):
    suites = analysis.list_suites() if args.suite == "all" else [args.suite]
    reports = []
    ok = True
    out_lines = []
    for suite in suites:
        report = analysis.theorem_campaign(suite, seed=args.seed)
        reports.append(report)
        for claim in report["claims"]:
            status = "PASS" if claim["pass"] else "FAIL"
            line = f"{status} {suite}/{claim['id']}"
            if not claim["pass"] and claim["detail"]:
                line += f": {claim['detail']}"
            out_lines.append(line)
        ok = ok and report["passed"]
    sys.stdout.write("\n".join(out_lines) + "\n")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(reports if args.suite == "all" else reports[0], fh, indent=2)
            fh.write("\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdncg",
        description="Exact engine for the social-distancing network creation game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, alpha=False, inp=False, budget=None):
        if alpha:
            p.add_argument("--alpha", required=True, help="exact rational, e.g. 7/3")
        if inp:
            p.add_argument("--input", required=True, help="graph file (text or .json)")
        p.add_argument("--output", help="write the result here instead of stdout")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if budget is not None:
            p.add_argument("--budget", type=int, default=budget)

    p = sub.add_parser("gen", help="emit a named graph family")
    p.add_argument(
        "--family",
        required=True,
        choices=(
            "path",
            "cycle",
            "star",
            "clique",
            "hypercube",
            "path-clique",
            "clique-network",
            "star-of-cliques",
            "hypercube-clique-network",
            "path-of-cliques",
            "wheel-clique-network",
        ),
    )
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--alpha")
    p.add_argument("--sizes", help="comma-separated clique sizes for clique-network")
    p.add_argument("--input", help="base graph for clique-network")
    p.add_argument("--output")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("sw", help="social welfare of the graph as its own state")
    common(p, alpha=True, inp=True)
    p.set_defaults(fn=_cmd_sw)

    p = sub.add_parser("stable", help="pairwise stability of the graph as its own state")
    common(p, alpha=True, inp=True)
    p.set_defaults(fn=_cmd_stable)

    p = sub.add_parser("dynamics", help="improving-move dynamics from the full graph")
    common(p, alpha=True, inp=True, budget=10_000)
    p.add_argument("--policy", choices=("first", "best", "random"), default="first")
    p.add_argument("--seed", type=int)
    p.set_defaults(fn=_cmd_dynamics)

    p = sub.add_parser("smrcst", help="swap-maximal routing-cost spanning tree")
    common(p, inp=True)
    p.add_argument("--policy", choices=("best", "first"), default="best")
    p.set_defaults(fn=_cmd_smrcst)

    p = sub.add_parser("mrcst", help="exact maximum routing-cost spanning tree")
    common(p, inp=True, budget=10**6)
    p.set_defaults(fn=_cmd_mrcst)

    p = sub.add_parser("opt", help="exact social optimum welfare")
    common(p, alpha=True, inp=True, budget=1 << 22)
    p.set_defaults(fn=_cmd_opt)

    p = sub.add_parser("atlas", help="exhaustive pairwise-stable set")
    common(p, alpha=True, inp=True, budget=1 << 22)
    p.set_defaults(fn=_cmd_atlas)

    p = sub.add_parser("poa", help="exact price of anarchy")
    common(p, alpha=True, inp=True, budget=1 << 22)
    p.set_defaults(fn=_cmd_poa)

    p = sub.add_parser("cycle", help="search for an improving-move cycle on K_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--output")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_cycle)

    p = sub.add_parser("sweep", help="PoA/PoS CSV over hosts x alphas")
    p.add_argument("--alpha", required=True, help="comma-separated exact rationals")
    p.add_argument("--input", action="append", help="host file; repeatable")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--max-edges", type=int, default=13)
    p.add_argument("--budget", type=int, default=1 << 16)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("campaign", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="write the JSON report here")
    p.set_defaults(fn=_cmd_campaign)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SdncgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
