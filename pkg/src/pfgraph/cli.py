"""Command-line front end.

Every subcommand is a thin shell over the library: it reads graph documents
(from files or stdin via ``-``), calls one library operation, and prints the
serialized result on stdout.  Diagnostics and error objects go to stderr so
stdout always carries a clean document.  Exit codes: 0 success, 1 domain
error (invalid graph, overlap on join, morphism not found under --require,
and similar), 2 usage or document-syntax error.

The PFG_EPSILON environment variable overrides the global comparison
tolerance (decimal, default 1e-9).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .algebra import (
    cartesian_product,
    complement,
    complete_complement,
    composition,
    join,
    strong_complement,
    union,
)
from .classify import classify, is_self_complementary, strong_sum_identity, sum_identity
from .core import set_tolerance, validate
from .errors import MalformedDocument, PFGError
from .generate import GenConfig, generate
from .graph_io import parse, render, to_dot
from .morphism import DEFAULT_SEARCH_CAP, MorphismKind, find_morphism

_KIND_NAMES = {
    "homo": MorphismKind.HOMOMORPHISM,
    "iso": MorphismKind.ISOMORPHISM,
    "weak": MorphismKind.WEAK_ISOMORPHISM,
    "coweak": MorphismKind.COWEAK_ISOMORPHISM,
}

_BINARY_OPS = {
    "cartesian": cartesian_product,
    "compose": composition,
    "union": union,
    "join": join,
}

_UNARY_OPS = {
    "complement": lambda g, force: complement(g),
    "strong-complement": strong_complement,
    "complete-complement": complete_complement,
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _read_graph(path: str, check: bool = True):
    return parse(_read_text(path), check=check)


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(payload: dict) -> None:
    _emit(json.dumps(payload, indent=2))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfgraph",
        description="Operate on Pythagorean fuzzy graph documents.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a graph document and print the report")
    p.add_argument("graph")

    p = sub.add_parser("op", help="apply a graph operation and print the result document")
    p.add_argument("name", choices=sorted(_BINARY_OPS) + sorted(_UNARY_OPS))
    p.add_argument("graphs", nargs="+", metavar="graph")
    p.add_argument(
        "--force",
        action="store_true",
        help="skip the strong/complete precondition on the complement variants",
    )

    p = sub.add_parser("classify", help="print the strength/completeness profile")
    p.add_argument("graph")

    p = sub.add_parser("sums", help="print the edge-degree versus pair-bound sum report")
    p.add_argument("graph")
    p.add_argument("--strong", action="store_true", help="compare against the full bound sums")

    p = sub.add_parser("iso", help="search for a morphism between two graphs")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.add_argument("--kind", choices=sorted(_KIND_NAMES), default="iso")
    p.add_argument("--cap", type=int, default=DEFAULT_SEARCH_CAP)
    p.add_argument(
        "--require",
        action="store_true",
        help="exit with status 1 when no morphism is found",
    )

    p = sub.add_parser("selfcomp", help="test whether a graph is isomorphic to its complement")
    p.add_argument("graph")
    p.add_argument("--variant", choices=("general", "strong", "complete"), default="general")
    p.add_argument("--cap", type=int, default=DEFAULT_SEARCH_CAP)

    p = sub.add_parser("gen", help="generate a seeded random graph document")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument(
        "--family",
        choices=("general", "strong", "complete", "half_strong"),
        default="general",
    )
    p.add_argument("--quantize", type=int, default=None)

    p = sub.add_parser("dot", help="export a graph document as DOT text")
    p.add_argument("graph")

    return parser


def _run(args: argparse.Namespace) -> int:
    if args.command == "validate":
        graph = _read_graph(args.graph, check=False)
        report = validate(graph)
        _emit_json(report.as_dict())
        return 0 if report.ok else 1

    if args.command == "op":
        if args.name in _UNARY_OPS:
            if len(args.graphs) != 1:
                raise SystemExit(f"op {args.name} takes exactly one graph")
            result = _UNARY_OPS[args.name](_read_graph(args.graphs[0]), args.force)
        else:
            if len(args.graphs) != 2:
                raise SystemExit(f"op {args.name} takes exactly two graphs")
            result = _BINARY_OPS[args.name](
                _read_graph(args.graphs[0]), _read_graph(args.graphs[1])
            )
        _emit(render(result))
        return 0

    if args.command == "classify":
        _emit_json(classify(_read_graph(args.graph)).as_dict())
        return 0

    if args.command == "sums":
        graph = _read_graph(args.graph)
        report = strong_sum_identity(graph) if args.strong else sum_identity(graph)
        _emit_json(report.as_dict())
        return 0

    if args.command == "iso":
        report = find_morphism(
            _read_graph(args.graph1),
            _read_graph(args.graph2),
            _KIND_NAMES[args.kind],
            cap=args.cap,
        )
        _emit_json(report.as_dict())
        if args.require and not report.found:
            return 1
        return 0

    if args.command == "selfcomp":
        report = is_self_complementary(_read_graph(args.graph), args.variant, cap=args.cap)
        _emit_json(
            {
                "variant": args.variant,
                "self_complementary": report.found,
                "witness": report.witness,
                "search_space": report.search_space,
            }
        )
        return 0

    if args.command == "gen":
        cfg = GenConfig(
            seed=args.seed,
            n_vertices=args.n,
            edge_probability=args.p,
            family=args.family,
            quantize=args.quantize,
        )
        _emit(render(generate(cfg)))
        return 0

    if args.command == "dot":
        _emit(to_dot(_read_graph(args.graph)))
        return 0

    raise SystemExit(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    env_eps = os.environ.get("PFG_EPSILON")
    if env_eps is not None:
        try:
            set_tolerance(float(env_eps))
        except ValueError:
            print(
                json.dumps({"error": "BadEpsilon", "message": f"PFG_EPSILON={env_eps!r}"}),
                file=sys.stderr,
            )
            return 2

    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        return _run(args)
    except MalformedDocument as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2
    except PFGError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    except OSError as exc:
        print(json.dumps({"error": "IOError", "message": str(exc)}), file=sys.stderr)
        return 2
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        print(json.dumps({"error": "UsageError", "message": str(exc)}), file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
