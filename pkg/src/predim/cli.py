"""Command-line interface: one subcommand per operation, JSON reports on stdout.

Exit codes: 0 for a completed computation (the verdict lives inside the
report, even when negative), 2 for malformed input, 3 for an exhausted step
budget.  Reports are deterministic modulo the timing field and validate
against the shipped schema (`predim --schema` prints it).
"""

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from importlib import resources

from .budget import Budget
from .classes import (
    ClassSpec,
    build_zero_min_witness,
    classify_zero_algebraic,
    classspec_from_json,
    member,
)
from .closures import closure, is_closed
from .coloring import build_coloring, full_coloring_matrix
from .components import build_component_graph, closed_embeddings, is_tree_pair_window
from .convex import SPREAD_THRESHOLD, classify_all, decide_convex_ramsey
from .density import degeneracy, max_density
from .errors import BudgetExhausted, InputError
from .graphs import graph_to_json, load_graph
from .matrices import parse_matrix
from .ramsey import non_ramsey_certificate, one_point_refutation
from .rational import fraction_str, parse_fraction
from .witness import build_witness, verify_claims, witness_to_files

DEFAULT_BUDGET = 50_000_000


def jsonable(value):
    """Recursively convert package values into JSON-serializable data."""
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def _digest(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def _budget_arg(parser):
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="step budget for searches (0 = unlimited)",
    )


def _make_budget(args):
    steps = getattr(args, "budget", None)
    if steps in (None, 0):
        return Budget(None)
    return Budget(steps)


def _subset(text):
    return [name for name in text.split(",") if name]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="predim",
        description="exact pre-dimension calculus, Ramsey certificates, and the "
        "convex Ramsey matrix condition",
    )
    parser.add_argument("--schema", action="store_true", help="print the report schema and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("delta", help="pre-dimension of a graph")
    p.add_argument("--alpha", default="2/1")
    p.add_argument("graph")

    p = sub.add_parser("closed", help="is a subset self-sufficient in a host graph")
    p.add_argument("--alpha", default="2/1")
    p.add_argument("--sub", required=True, help="comma-separated vertex names")
    p.add_argument("--within", help="optional upper bound set (defaults to the whole host)")
    p.add_argument("--sup", required=True, help="host graph file")
    _budget_arg(p)

    p = sub.add_parser("closure", help="smallest closed superset")
    p.add_argument("--alpha", default="2/1")
    p.add_argument("--set", dest="seed", required=True, help="comma-separated vertex names")
    p.add_argument("graph")
    _budget_arg(p)

    p = sub.add_parser("member", help="smooth-class membership")
    p.add_argument("--spec", help="class spec JSON file")
    p.add_argument("--alpha", default="2/1", help="used when no spec file is given")
    p.add_argument("--variant", default="k_plus", help="used when no spec file is given")
    p.add_argument("graph")
    _budget_arg(p)

    p = sub.add_parser("maxdensity", help="maximum subgraph density")
    p.add_argument("graph")
    _budget_arg(p)

    p = sub.add_parser("degeneracy", help="largest minimum degree over subgraphs")
    p.add_argument("graph")

    p = sub.add_parser("ramsey-cert", help="density-based non-arrowing certificate")
    p.add_argument("--B", dest="b", required=True, help="pattern graph file")
    p.add_argument("--C", dest="c", required=True, help="host graph file")
    p.add_argument("-r", type=int, required=True, help="number of colors")
    _budget_arg(p)

    p = sub.add_parser("one-point", help="single-vertex Ramsey refutation schema")
    p.add_argument("--alpha", default="2/1")
    p.add_argument("--variant", default="k_plus")
    p.add_argument("--spec", help="class spec JSON file (overrides --alpha/--variant)")
    p.add_argument("-n", type=int, required=True, help="cycle length")
    p.add_argument("-r", type=int, required=True, help="number of colors")
    p.add_argument("--ordered", action="store_true")
    _budget_arg(p)

    p = sub.add_parser("convex", help="convex Ramsey matrix condition")
    p.add_argument("--matrix", required=True, help="0/1 matrix file, one row per line")
    p.add_argument("--threshold", default=None, help="spread threshold (default 1/2)")

    p = sub.add_parser("classify", help="census of matrices under the condition")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--threshold", default=None)
    _budget_arg(p)

    p = sub.add_parser("embeddings", help="closed copies of a pattern in a window")
    p.add_argument("--pattern", required=True)
    p.add_argument("--window", required=True)
    p.add_argument("--alpha", default="2/1")
    _budget_arg(p)

    p = sub.add_parser("treepair", help="tree-pair check over a window")
    p.add_argument("--A", dest="a", required=True)
    p.add_argument("--B", dest="b", required=True)
    p.add_argument("--window", required=True)
    p.add_argument("--alpha", default="2/1")
    _budget_arg(p)

    p = sub.add_parser("color", help="inductive coloring on a tree-pair window")
    p.add_argument("--matrix", required=True)
    p.add_argument("--window", required=True)
    p.add_argument("--A", dest="a", required=True)
    p.add_argument("--B", dest="b", required=True)
    p.add_argument("--alpha", default="2/1")
    p.add_argument("--root-row", type=int, default=0)
    p.add_argument(
        "--root-copy",
        type=int,
        default=None,
        help="index of the copy that takes the designated row",
    )
    _budget_arg(p)

    p = sub.add_parser("witness", help="build or verify the tree-pair witness")
    witness_sub = p.add_subparsers(dest="witness_command", required=True)
    pb = witness_sub.add_parser("build")
    pb.add_argument("--out", required=True, help="output directory")
    pb.add_argument("--reduced", action="store_true")
    pv = witness_sub.add_parser("verify")
    pv.add_argument("--reduced", action="store_true")
    _budget_arg(pv)

    p = sub.add_parser("zero-min", help="build a 0-minimally algebraic extension")
    p.add_argument("--A", dest="a", required=True, help="base graph file")
    p.add_argument("-m", type=int, required=True, help="cycle length")
    p.add_argument("--out", help="write the result graph here")
    _budget_arg(p)

    return parser


def _cmd_delta(args, inputs, budget):
    graph = load_graph(args.graph)
    inputs[args.graph] = _digest(args.graph)
    from .predimension import delta

    return {"delta": delta(graph, parse_fraction(args.alpha))}


def _cmd_closed(args, inputs, budget):
    host = load_graph(args.sup)
    inputs[args.sup] = _digest(args.sup)
    within = _subset(args.within) if args.within else None
    verdict = is_closed(
        _subset(args.sub), within, host, parse_fraction(args.alpha), budget=budget
    )
    return {"closed": verdict.closed, "violator": verdict.violator}


def _cmd_closure(args, inputs, budget):
    host = load_graph(args.graph)
    inputs[args.graph] = _digest(args.graph)
    result = closure(_subset(args.seed), host, parse_fraction(args.alpha), budget=budget)
    return {"closure": result.closure, "certificate": list(result.certificate)}


def _load_spec(args):
    if getattr(args, "spec", None):
        with open(args.spec, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InputError(f"invalid JSON in {args.spec}: {exc}") from exc
        return classspec_from_json(data), args.spec
    return ClassSpec(parse_fraction(args.alpha), args.variant), None


def _cmd_member(args, inputs, budget):
    graph = load_graph(args.graph)
    inputs[args.graph] = _digest(args.graph)
    spec, spec_path = _load_spec(args)
    if spec_path:
        inputs[spec_path] = _digest(spec_path)
    verdict = member(graph, spec, budget=budget)
    witness = verdict.witness
    if witness is not None and not isinstance(witness, frozenset):
        base, pair, count = witness
        witness = {"base": base, "pair": graph_to_json(pair), "count": count}
    return {
        "member": verdict.member,
        "witness": witness,
        "reason": verdict.reason,
        "class": spec.describe(),
    }


def _cmd_maxdensity(args, inputs, budget):
    graph = load_graph(args.graph)
    inputs[args.graph] = _digest(args.graph)
    report = max_density(graph, budget=budget)
    return {"value": report.value, "witness": report.witness}


def _cmd_degeneracy(args, inputs, budget):
    graph = load_graph(args.graph)
    inputs[args.graph] = _digest(args.graph)
    return {"degeneracy": degeneracy(graph)}


def _cmd_ramsey_cert(args, inputs, budget):
    b = load_graph(args.b)
    c = load_graph(args.c)
    inputs[args.b] = _digest(args.b)
    inputs[args.c] = _digest(args.c)
    cert = non_ramsey_certificate(b, c, args.r, budget=budget)
    return cert.describe()


def _cmd_one_point(args, inputs, budget):
    spec, spec_path = _load_spec(args)
    if spec_path:
        inputs[spec_path] = _digest(spec_path)
    report = one_point_refutation(spec, args.n, args.r, ordered=args.ordered, budget=budget)
    return report.describe()


def _cmd_convex(args, inputs, budget):
    with open(args.matrix, "r", encoding="utf-8") as fh:
        matrix = parse_matrix(fh.read())
    inputs[args.matrix] = _digest(args.matrix)
    threshold = parse_fraction(args.threshold) if args.threshold else SPREAD_THRESHOLD
    return decide_convex_ramsey(matrix, threshold).describe()


def _cmd_classify(args, inputs, budget):
    threshold = parse_fraction(args.threshold) if args.threshold else SPREAD_THRESHOLD
    return classify_all(args.rows, args.cols, threshold, budget=budget).describe()


def _cmd_embeddings(args, inputs, budget):
    pattern = load_graph(args.pattern)
    window = load_graph(args.window)
    inputs[args.pattern] = _digest(args.pattern)
    inputs[args.window] = _digest(args.window)
    copies = closed_embeddings(pattern, window, parse_fraction(args.alpha), budget=budget)
    return {
        "count": len(copies),
        "copies": [
            {"image": emb.image, "map": dict(sorted(emb.mapping.items()))}
            for emb in copies
        ],
    }


def _cmd_treepair(args, inputs, budget):
    a = load_graph(args.a)
    b = load_graph(args.b)
    window = load_graph(args.window)
    for path in (args.a, args.b, args.window):
        inputs[path] = _digest(path)
    verdict = is_tree_pair_window(a, b, window, parse_fraction(args.alpha), budget=budget)
    return verdict.describe()


def _cmd_color(args, inputs, budget):
    with open(args.matrix, "r", encoding="utf-8") as fh:
        matrix = parse_matrix(fh.read())
    a = load_graph(args.a)
    b = load_graph(args.b)
    window = load_graph(args.window)
    for path in (args.matrix, args.a, args.b, args.window):
        inputs[path] = _digest(path)
    alpha = parse_fraction(args.alpha)
    row_enum = closed_embeddings(a, b, alpha, budget=budget).copies
    copies = closed_embeddings(b, window, alpha, budget=budget)
    cg = build_component_graph(copies, a, alpha, budget=budget)
    roots = [args.root_copy] if args.root_copy is not None else None
    coloring = build_coloring(matrix, cg, row_enum, root_row_index=args.root_row,
                              roots=roots, budget=budget)
    realized = full_coloring_matrix(coloring.colors, copies, row_enum)
    return {
        "coloring": [
            {"copy": image, "color": color}
            for image, color in sorted(coloring.colors.items(), key=lambda kv: sorted(kv[0]))
        ],
        "rows_by_copy": {str(i): list(row) for i, row in sorted(coloring.assigned_rows.items())},
        "full_coloring_matrix": [list(r) for r in realized.rows],
    }


def _cmd_witness(args, inputs, budget):
    bundle = build_witness(reduced=args.reduced)
    if args.witness_command == "build":
        witness_to_files(bundle, args.out)
        return {
            "written": ["A.json", "B.json", "metadata.json"],
            "directory": args.out,
            "metadata": bundle.metadata(),
        }
    report = verify_claims(bundle, budget=budget)
    return report.describe()


def _cmd_zero_min(args, inputs, budget):
    base = load_graph(args.a)
    inputs[args.a] = _digest(args.a)
    result = build_zero_min_witness(base, args.m)
    cycle_part = result.vertex_set - base.vertex_set
    from .predimension import relative_delta

    rel = relative_delta(cycle_part, base.vertex_set, result, Fraction(2))
    status = classify_zero_algebraic(cycle_part, base.vertex_set, result, Fraction(2),
                                     budget=budget)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(graph_to_json(result), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return {
        "graph": graph_to_json(result),
        "relative_delta": rel,
        "classification": status.value,
    }


_HANDLERS = {
    "delta": _cmd_delta,
    "closed": _cmd_closed,
    "closure": _cmd_closure,
    "member": _cmd_member,
    "maxdensity": _cmd_maxdensity,
    "degeneracy": _cmd_degeneracy,
    "ramsey-cert": _cmd_ramsey_cert,
    "one-point": _cmd_one_point,
    "convex": _cmd_convex,
    "classify": _cmd_classify,
    "embeddings": _cmd_embeddings,
    "treepair": _cmd_treepair,
    "color": _cmd_color,
    "witness": _cmd_witness,
    "zero-min": _cmd_zero_min,
}


def report_schema():
    return json.loads(
        resources.files("predim").joinpath("report.schema.json").read_text("utf-8")
    )


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.schema:
        print(json.dumps(report_schema(), indent=2, sort_keys=True))
        return 0
    if not args.command:
        parser.print_help()
        return 2
    handler = _HANDLERS[args.command]
    inputs = {}
    budget = _make_budget(args)
    started = time.monotonic()
    status = "ok"
    try:
        result = handler(args, inputs, budget)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExhausted:
        report = {
            "command": args.command,
            "inputs": inputs,
            "result": {},
            "budget_status": "exhausted",
            "timing_ms": (time.monotonic() - started) * 1000.0,
        }
        print(json.dumps(jsonable(report), indent=2, sort_keys=True))
        return 3
    report = {
        "command": args.command,
        "inputs": inputs,
        "result": jsonable(result),
        "budget_status": status,
        "timing_ms": (time.monotonic() - started) * 1000.0,
    }
    print(json.dumps(jsonable(report), indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
