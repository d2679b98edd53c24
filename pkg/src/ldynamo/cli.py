"""Command-line front end.

Every subcommand prints a single JSON object {"inputs": ..., "result": ...}
with enough witness data to re-verify the answer via `check-dynamo`.
Exit codes: 0 success (including negative answers), 2 bad usage,
3 I/O or parse failure, 4 precondition violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as bounds_mod
from . import constructions, exact, forest, mcflow, propagation, transforms
from .errors import GraphFormatError, LdynamoError
from .graph import Graph, parse_graph, serialize_graph

EXIT_OK = 0
EXIT_IO = 3
EXIT_PRECONDITION = 4


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _seed_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a vertex list: {text!r}") from None


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _load_tau(path: str) -> propagation.ThresholdAssignment:
    return propagation.parse_thresholds(_read(path))


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (frozenset, set)):
        return sorted(obj)
    if isinstance(obj, propagation.ThresholdAssignment):
        return list(obj.values)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit(inputs: dict, result) -> int:
    print(json.dumps({"inputs": _jsonable(inputs), "result": _jsonable(result)},
                     sort_keys=True))
    return EXIT_OK


def _cmd_propagate(args) -> int:
    g = _load_graph(args.graph)
    t = _load_tau(args.tau)
    trace = propagation.propagate(g, t, args.seed)
    return _emit(
        {"graph": args.graph, "tau": args.tau, "seed": args.seed},
        {"rounds": [sorted(r) for r in trace.rounds],
         "unactivated": sorted(trace.unactivated)},
    )


def _cmd_check_dynamo(args) -> int:
    g = _load_graph(args.graph)
    t = _load_tau(args.tau)
    return _emit(
        {"graph": args.graph, "tau": args.tau, "seed": args.seed},
        propagation.is_dynamo(g, t, args.seed),
    )


def _cmd_min_dynamo(args) -> int:
    g = _load_graph(args.graph)
    t = _load_tau(args.tau)
    size, witness = exact.min_dynamo(g, t, cap=args.cap)
    return _emit(
        {"graph": args.graph, "tau": args.tau, "cap": args.cap},
        {"value": size, "dynamo": witness},
    )


def _cmd_ldyn_brute(args) -> int:
    g = _load_graph(args.graph)
    w = exact.ldyn_brute(g, args.t, allow_self_opinioned=args.allow_self_opinioned,
                         cap=args.cap)
    return _emit(
        {"graph": args.graph, "t": args.t,
         "allow_self_opinioned": args.allow_self_opinioned, "cap": args.cap},
        {"value": w.value, "tau": w.tau, "dynamo": w.dynamo},
    )


def _cmd_ldyn_forest(args) -> int:
    g = _load_graph(args.graph)
    r = forest.ldyn_forest(g, args.t)
    return _emit(
        {"graph": args.graph, "t": args.t},
        {"value": r.value, "tau": r.tau, "dynamo": r.dynamo,
         "matching": sorted(r.matching), "budget": r.budget},
    )


def _cmd_bounds(args) -> int:
    g = _load_graph(args.graph)
    report = bounds_mod.cc1_upper_bound(g, args.c)
    w = bounds_mod.ldyn_self_opinioned(g, args.t)
    return _emit(
        {"graph": args.graph, "t": args.t, "c": args.c},
        {
            "k0": bounds_mod.ksz_bound(g, args.t),
            "self_opinioned": {"value": w.value, "tau": w.tau, "dynamo": w.dynamo},
            "cc1": {
                "bound_value": report.bound_value,
                "t_star": report.t_star,
                "applicable": report.applicable,
                "k0_at_t_star": report.k0,
            },
        },
    )


def _cmd_decide(args) -> int:
    g = _load_graph(args.graph)
    return _emit(
        {"graph": args.graph, "k": args.k, "d": args.d},
        exact.decide_ldynamo(g, args.k, args.d, cap=args.cap),
    )


def _cmd_mcf(args) -> int:
    net = mcflow.parse_network(_read(args.network))
    flows = mcflow.min_cost_flow(net)
    if flows is None:
        return _emit({"network": args.network}, {"feasible": False})
    return _emit(
        {"network": args.network},
        {"feasible": True, "flows": flows, "cost": mcflow.flow_cost(net, flows)},
    )


def _write_instance(g, tau, graph_out, tau_out) -> dict:
    written = {}
    if graph_out:
        Path(graph_out).write_text(serialize_graph(g))
        written["graph_out"] = graph_out
    if tau_out:
        Path(tau_out).write_text(propagation.serialize_thresholds(tau))
        written["tau_out"] = tau_out
    return written


def _cmd_gen_prop3(args) -> int:
    g, tau = constructions.gen_prop3_family(args.n)
    written = _write_instance(g, tau, args.graph_out, args.tau_out)
    return _emit(
        {"n": args.n, **written},
        {"vertices": g.n, "edges": g.m, "tau": tau, "tau_average": tau.average},
    )


def _cmd_gen_hardness(args) -> int:
    g = _load_graph(args.graph)
    inst = constructions.gen_hardness_instance(g, args.k, args.l, mode=args.mode)
    written = _write_instance(inst.h, inst.tau, args.graph_out, args.tau_out)
    return _emit(
        {"graph": args.graph, "k": args.k, "l": args.l, "mode": args.mode, **written},
        {"vertices": inst.h.n, "edges": inst.h.m, "s": inst.s, "p": inst.p,
         "decision_threshold": inst.decision_threshold},
    )


def _cmd_verify_reduction(args) -> int:
    g = _load_graph(args.graph)
    inst = constructions.gen_hardness_instance(g, args.k, args.l, mode=args.mode)
    report = constructions.verify_reduction_claim(inst, g, args.k)
    return _emit(
        {"graph": args.graph, "k": args.k, "l": args.l, "mode": args.mode},
        {"beta_base": report.beta_base, "dyn_h": report.dyn_h,
         "expected_dyn": report.expected_dyn, "claim_holds": report.claim_holds,
         "tau_average": report.tau_average, "budget_ratio": report.budget_ratio,
         "within_budget": report.within_budget, "s": inst.s, "p": inst.p},
    )


def _cmd_interpolate(args) -> int:
    g = _load_graph(args.graph)
    t1 = _load_tau(args.tau1)
    t2 = _load_tau(args.tau2)
    sigma = transforms.find_intermediate(g, t1, t2, args.r)
    value, dynamo = exact.min_dynamo(g, sigma)
    return _emit(
        {"graph": args.graph, "tau1": args.tau1, "tau2": args.tau2, "r": args.r},
        {"tau": sigma, "value": value, "dynamo": dynamo},
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ldynamo",
        description="Worst-case dynamic monopolies under threshold budgets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("propagate", _cmd_propagate, help="run the activation process")
    p.add_argument("--graph", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--seed", type=_seed_list, default=[])

    p = add("check-dynamo", _cmd_check_dynamo, help="is the seed a dynamo?")
    p.add_argument("--graph", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--seed", type=_seed_list, default=[])

    p = add("min-dynamo", _cmd_min_dynamo, help="smallest dynamo (brute force)")
    p.add_argument("--graph", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--cap", type=int, default=exact.MIN_DYNAMO_CAP)

    p = add("ldyn-brute", _cmd_ldyn_brute, help="worst case by enumeration")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=_fraction, required=True)
    p.add_argument("--allow-self-opinioned", action="store_true")
    p.add_argument("--cap", type=int, default=exact.LDYN_BRUTE_CAP)

    p = add("ldyn-forest", _cmd_ldyn_forest, help="worst case on a forest")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=_fraction, required=True)

    p = add("bounds", _cmd_bounds, help="degree-sequence and c/(c+1) bounds")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=_fraction, required=True)
    p.add_argument("--c", type=_fraction, default=Fraction(1))

    p = add("decide", _cmd_decide, help="budgeted worst-case decision problem")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=_fraction, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--cap", type=int, default=exact.LDYN_BRUTE_CAP)

    p = add("mcf", _cmd_mcf, help="minimum-cost flow on a network file")
    p.add_argument("--network", required=True)

    gen = sub.add_parser("gen", help="instance generators")
    gsub = gen.add_subparsers(dest="generator", required=True)
    p = gsub.add_parser("prop3", help="worst-case clique family")
    p.set_defaults(func=_cmd_gen_prop3)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--graph-out")
    p.add_argument("--tau-out")
    p = gsub.add_parser("hardness", help="vertex-cover reduction instance")
    p.set_defaults(func=_cmd_gen_hardness)
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=_fraction, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--mode", choices=["star-per-vertex", "one-star"],
                   default="star-per-vertex")
    p.add_argument("--graph-out")
    p.add_argument("--tau-out")

    p = add("verify-reduction", _cmd_verify_reduction,
            help="check the reduction's dynamo identity")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=_fraction, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--mode", choices=["star-per-vertex", "one-star"],
                   default="star-per-vertex")

    p = add("interpolate", _cmd_interpolate,
            help="assignment with a prescribed minimum-dynamo size")
    p.add_argument("--graph", required=True)
    p.add_argument("--tau1", required=True)
    p.add_argument("--tau2", required=True)
    p.add_argument("--r", type=int, required=True)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (LdynamoError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
