# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.
"""Command line interface, installed as ``vtlink``.

Exit codes: 0 on success, 1 if ``--fail-on-eliminated`` is given and some input
was eliminated, 2 on parse and usage errors and 3 if an internal consistency check failed.
"""

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from ._utils import InvariantViolation
from .cayley import default_catalog, load_census, neighbourhood_census, save_census, semidihedral_demo, soundness_check
from .data import DATASET_PARENT
from .elimination import ELIMINATED, EliminationLimits, run_all
from .graphs import GraphFormatError, emit_edge_list, graph_stats, read_graphs
from .permutations import is_asymmetric
from .selftest import run_selftest
from .structure import classify_vertices, max_fixed_subset, orbit_restrictors

logger = logging.getLogger(__name__)

CENSUS_PATH_VARIABLE = "NEIGHBOURHOOD_CENSUS_PATH"

EXIT_OK = 0
EXIT_ELIMINATED = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3


def _read_input(source, format):
    if source == "-":
        text = sys.stdin.read()
    else:
        path = Path(source)
        if not path.exists() and (DATASET_PARENT / path.name).is_file():
            path = DATASET_PARENT / path.name
        text = path.read_text()
    return read_graphs(text, format=format)


def _limits(args):
    return EliminationLimits(max_clique_order=args.max_clique_order)


def _labels(graph, vertices):
    return [graph.label(v) for v in sorted(vertices)]


def analyze(graph, max_clique_order=8):
    """Structural summary of ``graph`` as a JSON-serialisable dict."""
    stats = graph_stats(graph)
    partition = classify_vertices(graph)
    return {
        "n": stats.n,
        "m": stats.m,
        "valencies": list(stats.valencies),
        "asymmetric": is_asymmetric(graph),
        "classes": [_labels(graph, members) for members in partition.classes],
        "orbit_restrictors": [_labels(graph, s) for s in orbit_restrictors(graph, max_clique_order)],
        "fixed_subsets": {
            graph.label(min(members)): _labels(graph, max_fixed_subset(graph, min(members)))
            for members in partition.classes
        },
    }


def _analysis_text(analysis):
    lines = [
        "n = {}, m = {}".format(analysis["n"], analysis["m"]),
        "valencies: {}".format(" ".join(str(d) for d in analysis["valencies"])),
        "asymmetric: {}".format("yes" if analysis["asymmetric"] else "no"),
        "classes:",
    ]
    lines.extend("  {{{}}}".format(", ".join(members)) for members in analysis["classes"])
    lines.append("orbit-restrictors:")
    lines.extend("  {{{}}}".format(", ".join(s)) for s in analysis["orbit_restrictors"])
    lines.append("maximal fixed subsets:")
    lines.extend(
        "  F(X, {}) = {{{}}}".format(vertex, ", ".join(fixed)) for vertex, fixed in analysis["fixed_subsets"].items()
    )
    return "\n".join(lines)


def _eliminate_one(job):
    graph, options = job
    report = run_all(
        graph,
        scope_filter=options["scope"],
        all_rules=options["all_rules"],
        limits=options["limits"],
    )
    return report.to_json() if options["json"] else report.to_text(), report.overall.outcome == ELIMINATED


def _map_jobs(function, jobs, n_jobs):
    if n_jobs == 1 or len(jobs) <= 1:
        return [function(job) for job in jobs]
    # Executor.map yields results in submission order
    with ProcessPoolExecutor(max_workers=n_jobs) as executor:
        return list(executor.map(function, jobs))


def _command_analyze(args):
    for graph in _read_input(args.input, args.format):
        analysis = analyze(graph, args.max_clique_order)
        print(json.dumps(analysis) if args.json else _analysis_text(analysis))
    return EXIT_OK


def _command_eliminate(args):
    graphs = _read_input(args.input, args.format)
    options = {"scope": args.scope, "all_rules": args.all_rules, "limits": _limits(args), "json": args.json}
    eliminated = False
    for output, was_eliminated in _map_jobs(_eliminate_one, [(graph, options) for graph in graphs], args.jobs):
        print(output)
        if not args.json and len(graphs) > 1:
            print()
        eliminated = eliminated or was_eliminated
    if eliminated and args.fail_on_eliminated:
        return EXIT_ELIMINATED
    return EXIT_OK


def _command_census(args):
    if args.census_path and Path(args.census_path).is_file():
        census = load_census(args.census_path)
        logger.info("Loaded %d neighbourhoods from %s", len(census.forms), args.census_path)
    else:
        census = neighbourhood_census(
            default_catalog(args.max_group_order),
            max_size=args.max_connection_size,
            progress=args.verbose > 0,
        )
    if args.output:
        save_census(census, args.output)

    violations = soundness_check(census, limits=_limits(args), verbose=100 if args.verbose else False)
    print("{} neighbourhoods in census ({})".format(len(census.forms), ", ".join(census.meta.catalog)))
    for violation in violations:
        print("{}: {} {}".format(violation.form.decode("ascii"), violation.kind, violation.detail))
    if violations:
        print("{} violations".format(len(violations)))
        return EXIT_INVARIANT
    print("no violations")
    return EXIT_OK


def _command_demo(args):
    demo = semidihedral_demo()
    print("group: {} (order {})".format(demo.group.name, demo.group.order))
    print("connection set: {}".format(", ".join(demo.group.names[a] for a in sorted(demo.connection_set))))
    print("graph6: {}".format(demo.graph6.decode("ascii")))
    print("edges:")
    print(emit_edge_list(demo.neighbourhood), end="")
    print("asymmetric: {}".format("yes" if demo.report.asymmetric else "no"))
    print("overall: {}".format(demo.report.overall.outcome))
    return EXIT_OK


def _command_selftest(args):
    results = run_selftest(max_order=args.max_order, samples=args.samples, random_state=args.seed)
    for result in results:
        print("{:<16} {:>5} graphs  {}".format(result.name, result.checked, "pass" if result.passed else "FAIL"))
        for form in result.failures:
            print("  {}".format(form))
    return EXIT_OK if all(result.passed for result in results) else EXIT_INVARIANT


def build_parser():
    parser = argparse.ArgumentParser(
        prog="vtlink", description="Certify that graphs are not neighbourhoods of vertex-transitive graphs."
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log INFO (-v) or DEBUG (-vv) to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_input(subparser):
        subparser.add_argument("input", nargs="?", default="-", help="input file, '-' for standard input")
        subparser.add_argument("--format", choices=["graph6", "edges", "auto"], default="auto")
        subparser.add_argument("--json", action="store_true", help="write JSON instead of text")

    def add_limits(subparser):
        subparser.add_argument("--max-clique-order", type=int, default=8, help="largest clique order enumerated")

    analyze_parser = subparsers.add_parser("analyze", help="print the structure used by the rules")
    add_input(analyze_parser)
    add_limits(analyze_parser)

    eliminate_parser = subparsers.add_parser("eliminate", help="run the elimination rules")
    add_input(eliminate_parser)
    add_limits(eliminate_parser)
    eliminate_parser.add_argument("--all-rules", action="store_true", help="do not stop at the first elimination")
    eliminate_parser.add_argument("--scope", choices=["any", "vertex-transitive"], default="any")
    eliminate_parser.add_argument("--jobs", type=int, default=1, help="worker processes for batch input")
    eliminate_parser.add_argument("--fail-on-eliminated", action="store_true", help="exit with 1 on elimination")

    census_parser = subparsers.add_parser("census", help="check the rules against Cayley graph neighbourhoods")
    add_limits(census_parser)
    census_parser.add_argument(
        "--census-path",
        "--census_path",
        default=os.environ.get(CENSUS_PATH_VARIABLE),
        help="census file to load (default: ${})".format(CENSUS_PATH_VARIABLE),
    )
    census_parser.add_argument("--max-group-order", type=int, default=16)
    census_parser.add_argument("--max-connection-size", type=int, default=8)
    census_parser.add_argument("--output", help="write the census to this file")

    subparsers.add_parser("demo", help="rebuild the asymmetric semidihedral neighbourhood")

    selftest_parser = subparsers.add_parser("selftest", help="compare fast paths with brute-force oracles")
    selftest_parser.add_argument("--max-order", type=int, default=7)
    selftest_parser.add_argument("--samples", type=int, default=50)
    selftest_parser.add_argument("--seed", type=int, default=0)
    return parser


COMMANDS = {
    "analyze": _command_analyze,
    "eliminate": _command_eliminate,
    "census": _command_census,
    "demo": _command_demo,
    "selftest": _command_selftest,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else logging.INFO, stream=sys.stderr)

    try:
        return COMMANDS[args.command](args)
    except InvariantViolation as e:
        print("vtlink: internal check failed: {}".format(e), file=sys.stderr)
        return EXIT_INVARIANT
    except (GraphFormatError, OSError, ValueError) as e:
        print("vtlink: {}".format(e), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
