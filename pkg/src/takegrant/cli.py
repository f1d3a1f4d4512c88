"""Command-line front end.

Exit codes are the scripting contract: 0 success (for queries: bridge
found), 1 query answered negative, 2 usage or input error, 3 internal
invariant violation.  Every subcommand that reads a graph accepts a
file path or ``-`` for stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .bridges import (
    Direction,
    bridge_exists,
    bridge_exists_faithful,
    bridges_between_islands,
    report_to_jsonable,
    validate_path,
)
from .errors import (
    EmptySpecError,
    InvariantViolationError,
    ParseError,
    SameIslandError,
    SameVertexError,
    UnknownVertexError,
)
from .graph import ProtectionGraph, Right, VertexKind, parse_graph, serialize_graph
from .islands import compute_islands
from .oracle import RandomGraphSpec, brute_force_bridge, random_graph

EXIT_FOUND = 0
EXIT_NOT_FOUND = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_BENCH_TRIALS = 3


def _read_graph(path: str) -> ProtectionGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_graph(text)


def _direction(args: argparse.Namespace) -> Direction:
    return Direction.BACKWARD if args.backward else Direction.FORWARD


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _cmd_islands(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    for island in compute_islands(g):
        names = " ".join(g.vertex_name(v) for v in island.members)
        print(f"island {island.index}: {names}")
    return EXIT_FOUND


def _cmd_bridge(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    s = g.vertex_id(args.source)
    f = g.vertex_id(args.target)
    direction = _direction(args)
    report = bridge_exists(g, s, f, direction)
    if report.path is not None:
        validate_path(g, report.path)
        if (
            report.path.length == 1
            and g.vertex_kind(s) is VertexKind.SUBJECT
            and g.vertex_kind(f) is VertexKind.SUBJECT
        ):
            print(
                f"warning: {args.source} and {args.target} share a direct t arc, "
                "so they sit in the same island; this is not an inter-island bridge",
                file=sys.stderr,
            )
    if args.json:
        print(json.dumps(report_to_jsonable(g, report)))
    else:
        arrow = "t->*" if direction is Direction.FORWARD else "t<-*"
        head = f"bridge {arrow} {args.source} ~> {args.target}:"
        if report.exists:
            print(f"{head} FOUND (length {report.path.length}, passes {report.passes})")
            if args.path:
                print("path: " + " ".join(g.vertex_name(v) for v in report.path.vertices))
        else:
            print(f"{head} NOT FOUND (passes {report.passes})")
    return EXIT_FOUND if report.exists else EXIT_NOT_FOUND


def _cmd_bridges(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    islands = compute_islands(g)
    for index in (args.island_a, args.island_b):
        if not 0 <= index < len(islands):
            return _usage_error(f"island index {index} out of range; graph has {len(islands)} islands")
    if args.island_a == args.island_b:
        return _usage_error("island indices must differ")
    found = bridges_between_islands(
        g, islands[args.island_a], islands[args.island_b], _direction(args)
    )
    for s, f, path in found:
        names = " ".join(g.vertex_name(v) for v in path.vertices)
        print(f"{g.vertex_name(s)} ~> {g.vertex_name(f)}: {names}")
    return EXIT_FOUND if found else EXIT_NOT_FOUND


def _cmd_check(args: argparse.Namespace) -> int:
    if args.trials < 0:
        return _usage_error("--trials must be >= 0")
    if not 0.0 <= args.p <= 1.0:
        return _usage_error("--p must be in [0, 1]")
    if args.subjects < 2:
        return _usage_error("check needs at least 2 subjects for its query endpoints")
    if args.objects < 0:
        return _usage_error("--objects must be >= 0")
    # Rights beyond t are generated as noise: a correct search never
    # reacts to them, so disagreement flags label-filtering bugs too.
    pool = frozenset(Right)
    agree = 0
    for trial in range(args.trials):
        spec = RandomGraphSpec(args.subjects, args.objects, args.p, pool, seed=args.seed + trial)
        g = random_graph(spec)
        s, f = 0, 1  # the first two subjects
        ok = True
        for direction in (Direction.FORWARD, Direction.BACKWARD):
            fast = bridge_exists(g, s, f, direction)
            slow = bridge_exists_faithful(g, s, f, direction)
            witness = brute_force_bridge(g, s, f, direction)
            if fast != slow or fast.exists != (witness is not None):
                ok = False
        if ok:
            agree += 1
    print(f"{agree}/{args.trials} agree")
    return EXIT_FOUND if agree == args.trials else EXIT_INTERNAL


def _cmd_gen(args: argparse.Namespace) -> int:
    if not 0.0 <= args.p <= 1.0:
        return _usage_error("--p must be in [0, 1]")
    if args.subjects < 0 or args.objects < 0:
        return _usage_error("vertex counts must be >= 0")
    spec = RandomGraphSpec(args.subjects, args.objects, args.p, frozenset(args.rights), args.seed)
    text = serialize_graph(random_graph(spec))
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return EXIT_FOUND


def _cmd_bench(args: argparse.Namespace) -> int:
    if not 0.0 <= args.density <= 1.0:
        return _usage_error("--density must be in [0, 1]")
    if any(n < 2 for n in args.sizes):
        return _usage_error("every size must be >= 2")
    variants = {
        "optimized": (("optimized", bridge_exists),),
        "faithful": (("faithful", bridge_exists_faithful),),
        "both": (("optimized", bridge_exists), ("faithful", bridge_exists_faithful)),
    }[args.variant]
    print("variant,n,arcs,passes,nanos")
    for name, engine in variants:
        for n in args.sizes:
            # Timed query is a worst-case miss: the target is an isolated
            # object, so the engine must exhaust everything reachable
            # before it may conclude there is no bridge.  Hit queries
            # stop whenever the target happens to fall into the reached
            # set, which says little about how the engine scales.
            spec = RandomGraphSpec(1, n - 2, args.density, frozenset({Right.T}), args.seed + n)
            g = random_graph(spec)
            sink = g.add_vertex("sink", VertexKind.OBJECT)
            total_ns = 0
            report = None
            for _ in range(_BENCH_TRIALS):
                start = time.perf_counter_ns()
                report = engine(g, 0, sink, Direction.FORWARD)
                total_ns += time.perf_counter_ns() - start
            print(f"{name},{n},{g.edge_count},{report.passes},{total_ns // _BENCH_TRIALS}")
    return EXIT_FOUND


def _sizes_arg(text: str) -> list[int]:
    try:
        sizes = [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must be comma-separated integers, got {text!r}")
    if not sizes:
        raise argparse.ArgumentTypeError("sizes list must not be empty")
    return sizes


def _rights_arg(text: str) -> tuple[Right, ...]:
    try:
        return tuple(Right(ch) for ch in text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"rights must be letters from 'tgrw', got {text!r}")


def _add_graph_spec_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--subjects", type=int, default=2, help="number of subject vertices")
    parser.add_argument("--objects", type=int, default=4, help="number of object vertices")
    parser.add_argument("--p", type=float, default=0.3, help="per-(pair, right) arc probability")
    parser.add_argument("--seed", type=int, default=1, help="generator seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="takegrant",
        description="Island and t-bridge analysis for Take-Grant protection graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("islands", help="list maximal tg-connected subject groups")
    p.add_argument("file", help="TGG graph file, or - for stdin")
    p.set_defaults(func=_cmd_islands)

    p = sub.add_parser("bridge", help="search one s ~> f bridge")
    p.add_argument("file", help="TGG graph file, or - for stdin")
    p.add_argument("source", help="start vertex name")
    p.add_argument("target", help="final vertex name")
    p.add_argument("--backward", action="store_true", help="walk t arcs against their direction (t<-*)")
    p.add_argument("--json", action="store_true", help="emit the full search report as JSON")
    p.add_argument("--path", action="store_true", help="also print the witness path")
    p.set_defaults(func=_cmd_bridge)

    p = sub.add_parser("bridges", help="enumerate bridges between two islands")
    p.add_argument("file", help="TGG graph file, or - for stdin")
    p.add_argument("island_a", type=int, help="index of the start island")
    p.add_argument("island_b", type=int, help="index of the final island")
    p.add_argument("--backward", action="store_true", help="walk t arcs against their direction (t<-*)")
    p.set_defaults(func=_cmd_bridges)

    p = sub.add_parser("check", help="audit the search engines against the brute-force oracle")
    _add_graph_spec_flags(p)
    p.add_argument("--trials", type=int, default=1000, help="number of random graphs to audit")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gen", help="generate a random TGG graph file")
    _add_graph_spec_flags(p)
    p.add_argument("--rights", type=_rights_arg, default=(Right.T, Right.G), help="rights pool, e.g. tg")
    p.add_argument("-o", "--output", default="-", help="output path, or - for stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="time both engines over generated graphs, CSV on stdout")
    p.add_argument("--sizes", type=_sizes_arg, required=True, help="comma-separated vertex counts")
    p.add_argument("--density", type=float, default=0.05, help="t-arc probability per ordered pair")
    p.add_argument("--seed", type=int, default=1, help="generator seed")
    p.add_argument("--variant", choices=("both", "optimized", "faithful"), default="both")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        return _usage_error(str(exc))
    except (UnknownVertexError, SameVertexError, SameIslandError, EmptySpecError) as exc:
        return _usage_error(str(exc))
    except OSError as exc:
        return _usage_error(str(exc))
    except InvariantViolationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
