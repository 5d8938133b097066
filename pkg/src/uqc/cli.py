"""Command-line front end.

Subcommands: check | repair | construct | epsilon | oracle.  Documents are
JSON (see :mod:`uqc.io`); exit code 0 means the analysis ran (whatever the
verdict), 2 flags a parse/validation problem, 3 a numerical failure.  The
environment variable UQC_TOLERANCE_PROFILE (strict | default | loose) picks
the edge-threshold tier; the input file's ``tolerances`` section and the
``--tau-edge`` flag override it in that order.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import __version__, io
from .errors import InvalidInput, NumericalFailure
from .generators import Algebra, epsilon_bound, epsilon_bound_per_generator
from .linalg import matrix_exp, operator_norm
from .oracle import closure_block_partition, lie_closure
from .repair import BridgeStyle, minimal_pair, repair
from .universality import build_coupling_graph, check_universality, VerdictStatus

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERICAL = 3


def _resolve_tolerances(file_overrides: dict, args) -> io.RunTolerances:
    tols = io.RunTolerances()
    profile = os.environ.get("UQC_TOLERANCE_PROFILE")
    if profile:
        tols.apply_profile(profile)
    tols.apply_overrides(file_overrides)
    if getattr(args, "tau_edge", None) is not None:
        tols.tau_edge = args.tau_edge
    return tols


def _oracle_section(gen_set, verdict, tols):
    report = lie_closure(gen_set, tau_rank=tols.tau_rank)
    partition = closure_block_partition(report, tau_edge=tols.tau_edge)
    agrees = partition == verdict.components
    if verdict.status is VerdictStatus.UNIVERSAL:
        agrees = agrees and report.dimension == report.target_dimension
    return {
        "dimension": report.dimension,
        "target_dimension": report.target_dimension,
        "agrees": agrees,
    }


def _emit(args, doc: dict, text: str):
    print(text if args.text else io.dump_json(doc))


def _cmd_check(args) -> int:
    gen_set, overrides = io.load_input_document(args.input)
    tols = _resolve_tolerances(overrides, args)
    verdict = check_universality(
        gen_set,
        tau_edge=tols.tau_edge,
        relation_bound=tols.relation_bound,
        tau_rel=tols.tau_rel,
    )
    try:
        eps = epsilon_bound(gen_set)
    except InvalidInput:
        eps = None
    oracle = _oracle_section(gen_set, verdict, tols) if args.oracle else None
    doc = io.verdict_to_document(verdict, epsilon_max=eps, oracle=oracle)
    graph_text = None
    if args.text:
        labels = [g.label or f"g{j + 1}" for j, g in enumerate(gen_set.generators)]
        graph_text = io.render_graph_text(
            build_coupling_graph(gen_set, tols.tau_edge), labels
        )
    _emit(args, doc, io.render_verdict_text(doc, graph_text))
    return EXIT_OK


def _cmd_repair(args) -> int:
    gen_set, overrides = io.load_input_document(args.input)
    tols = _resolve_tolerances(overrides, args)
    selection = "largest-inside" if args.selection == "paper-example" else args.selection
    plan = repair(
        gen_set,
        style=BridgeStyle(args.style),
        tau_edge=tols.tau_edge,
        selection=selection,
    )
    io.write_document(
        io.generator_set_to_document(plan.resulting_set, overrides or None),
        args.out,
    )
    verdict = check_universality(
        plan.resulting_set,
        tau_edge=tols.tau_edge,
        relation_bound=tols.relation_bound,
        tau_rel=tols.tau_rel,
    )
    doc = io.verdict_to_document(
        verdict,
        epsilon_max=epsilon_bound(plan.resulting_set),
        repair=io.repair_plan_to_document(plan),
    )
    _emit(args, doc, io.render_verdict_text(doc))
    return EXIT_OK


def _cmd_construct(args) -> int:
    if args.dim < 1:
        raise InvalidInput(f"--dim must be >= 1, got {args.dim}")
    gen_set = minimal_pair(Algebra(kind=args.algebra, dim=args.dim), style=args.style)
    doc = io.generator_set_to_document(gen_set)
    io.write_document(doc, args.out)
    if args.text:
        print(
            f"wrote {args.out}: {args.algebra}({args.dim}), "
            f"{len(gen_set.generators)} generator(s)"
        )
    else:
        print(io.dump_json(doc))
    return EXIT_OK


def _cmd_epsilon(args) -> int:
    gen_set, overrides = io.load_input_document(args.input)
    _resolve_tolerances(overrides, args)
    bounds = epsilon_bound_per_generator(gen_set)
    eps = epsilon_bound(gen_set)
    per_gen = []
    for gen, b in zip(gen_set.generators, bounds):
        entry = {
            "label": gen.label,
            "operator_norm": operator_norm(gen.matrix),
            "epsilon_max": None if math.isinf(b) else b,
        }
        if math.isfinite(b):
            U = matrix_exp(gen.matrix, 0.99 * b)
            entry["distance_at_0.99"] = operator_norm(U - np.eye(gen_set.dim))
        per_gen.append(entry)
    doc = {"epsilon_max": eps, "generators": per_gen}
    if args.text:
        lines = [f"epsilon_max (set): {eps:.6g}"]
        for entry in per_gen:
            if entry["epsilon_max"] is None:
                lines.append(f"  {entry['label']}: zero generator, unconstrained")
            else:
                lines.append(
                    f"  {entry['label']}: epsilon_max {entry['epsilon_max']:.6g}, "
                    f"|exp(0.99 eps X) - I| = {entry['distance_at_0.99']:.6f} < sqrt(2)"
                )
        print("\n".join(lines))
    else:
        print(io.dump_json(doc))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    gen_set, overrides = io.load_input_document(args.input)
    tols = _resolve_tolerances(overrides, args)
    report = lie_closure(gen_set, tau_rank=tols.tau_rank)
    partition = closure_block_partition(report, tau_edge=tols.tau_edge)
    doc = io.closure_report_to_document(report, partition)
    if args.text:
        comps = " ".join(
            "{" + ",".join(map(str, c)) + "}" for c in doc["closure_partition"]
        )
        print(
            f"closure dimension: {doc['dimension']} of {doc['target_dimension']}\n"
            f"rounds: {doc['rounds']}\n"
            f"closure residual: {doc['residual_max']:.3g}\n"
            f"closure partition: {comps}"
        )
    else:
        print(io.dump_json(doc))
    return EXIT_OK


def _add_format_flags(p: argparse.ArgumentParser):
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument(
        "--json", dest="text", action="store_false", help="JSON output (default)"
    )
    fmt.add_argument("--text", dest="text", action="store_true", help="plain-text output")
    p.set_defaults(text=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uqc",
        description=(
            "Decide whether exponentiating a set of skew-Hermitian generators "
            "yields a universal gate set for U(d) or SU(d), via the coupling-"
            "graph criterion; repair, construct, and cross-check with a "
            "Lie-closure oracle."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="universality verdict for an input document")
    p.add_argument("input", help="path to a generator-set JSON document")
    p.add_argument("--oracle", action="store_true", help="also run the Lie-closure oracle")
    p.add_argument("--tau-edge", type=float, default=None, help="edge-detection threshold")
    _add_format_flags(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("repair", help="bridge disconnected components, write the new set")
    p.add_argument("input")
    p.add_argument("--style", choices=["antisym", "sym"], default="antisym")
    p.add_argument(
        "--selection",
        choices=["smallest", "paper-example"],
        default="smallest",
        help=(
            "bridge endpoint rule: smallest index inside the start component, "
            "or (paper-example) the largest inside; the mate is always the "
            "smallest index outside"
        ),
    )
    p.add_argument("--out", required=True, help="path for the repaired document")
    p.add_argument("--tau-edge", type=float, default=None)
    _add_format_flags(p)
    p.set_defaults(func=_cmd_repair)

    p = sub.add_parser("construct", help="write a minimal two-generator universal set")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--algebra", choices=["u", "su"], default="u")
    p.add_argument("--style", choices=["antisym", "sym"], default="antisym")
    p.add_argument("--out", required=True)
    _add_format_flags(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("epsilon", help="small-step bound per generator")
    p.add_argument("input")
    _add_format_flags(p)
    p.set_defaults(func=_cmd_epsilon)

    p = sub.add_parser("oracle", help="Lie-closure report only")
    p.add_argument("input")
    p.add_argument("--tau-edge", type=float, default=None)
    _add_format_flags(p)
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
