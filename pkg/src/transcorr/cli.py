"""Command-line entry point.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .datasets import MANIFEST_ENV, default_manifest, load_graph, read_manifest
from .generators import ErParams, WindmillParams, gen_clique_union, gen_erdos_renyi, gen_windmill
from .graph import (
    DegenerateGraphError,
    DiGraph,
    GraphParseError,
    IngestOptions,
    parse_adjacency_matrix,
    parse_edge_list,
    write_edge_list,
)
from .measures import Measure, all_measures
from .profile import SvgOptions, conditional_profile, emit_profile_svg, write_profile_csv
from .simulate import simulate_er, write_simulation_csv
from .verify import verify_windmills

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2

class UsageError(Exception):
    pass

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")

def _int_range(text: str) -> range:
    for sep in ("..", ":", "-"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            break
    else:
        lo = hi = text
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use e.g. 2..6") from None
    if hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)

def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from None

def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None

def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph file, or - for stdin")
    p.add_argument("--format", choices=("edges", "matrix"), default="edges")
    p.add_argument("--threshold", type=float, default=0.0, help="tie iff value > threshold (default 0)")
    p.add_argument("--symmetrize", action="store_true", help="treat every tie as mutual")
    p.add_argument("--dataset", help="dataset name from the manifest")
    p.add_argument("--manifest", help=f"dataset manifest (default ${MANIFEST_ENV})")

def _load(args) -> DiGraph:
    if args.dataset:
        manifest = read_manifest(args.manifest) if args.manifest else default_manifest()
        if args.dataset not in manifest:
            raise UsageError(f"dataset {args.dataset!r} not in manifest")
        return manifest[args.dataset].load()
    if not args.input:
        raise UsageError("no input graph given")
    opts = IngestOptions(args.threshold, args.symmetrize)
    if args.input == "-":
        parse = parse_adjacency_matrix if args.format == "matrix" else parse_edge_list
        return parse(sys.stdin, opts)
    return load_graph(args.input, args.format, opts)

def cmd_stats(args) -> int:
    g = _load(args)
    report = all_measures(g, args.lc_policy)
    if args.json:
        json.dump(report.as_dict(), sys.stdout, indent=2)
        sys.stdout.write("\n")
        return EXIT_OK
    for key, value in report.as_dict().items():
        if key.endswith("_status"):
            continue
        m = getattr(report, key)
        print(f"{key} = {m if isinstance(m, Measure) else value}")
    return EXIT_OK

def cmd_profile(args) -> int:
    g = _load(args)
    prof = conditional_profile(g, include_isolates=args.include_isolates)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_profile_csv(prof, fh)
    if args.svg:
        Path(args.svg).write_text(emit_profile_svg(prof, SvgOptions(title=args.title or "")), encoding="utf-8")
    drops = ",".join(map(str, prof.drops)) or "none"
    print(f"C = {prof.c_line}  TB = {prof.slope}  drops = {drops}")
    return EXIT_OK

def cmd_generate(args) -> int:
    if args.family == "er":
        g = gen_erdos_renyi(ErParams(args.n, args.p, args.seed))
        header = [f"family=er n={args.n} p={args.p!r} seed={args.seed}", "rng=numpy PCG64 via SeedSequence"]
    elif args.family == "windmill":
        g = gen_windmill(WindmillParams(args.m, args.r))
        header = [f"family=windmill m={args.m} r={args.r}"]
    else:
        g = gen_clique_union(args.sizes, args.isolates)
        header = [f"family=cliques sizes={','.join(map(str, args.sizes))} isolates={args.isolates}"]
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_edge_list(g, fh, header)
    else:
        write_edge_list(g, sys.stdout, header)
    return EXIT_OK

def cmd_verify_windmill(args) -> int:
    res = verify_windmills(args.m_range, args.r_range)
    print(f"checked = {res.checked}")
    print(f"max_deviation = {res.max_deviation:.3e}")
    if res.ok:
        print("PASS")
        return EXIT_OK
    for mm in res.mismatches:
        print(f"MISMATCH {mm}")
    print("FAIL")
    return EXIT_VERIFY

def cmd_simulate_er(args) -> int:
    rows = simulate_er(args.n, args.densities, args.reps, args.seed, args.workers)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_simulation_csv(rows, args.reps, fh)
    else:
        write_simulation_csv(rows, args.reps, sys.stdout)
    return EXIT_OK

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="transcorr", description="Comparative transitivity measures for digraphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stats", help="all measures for one graph")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--lc-policy", choices=("exclude", "zero"), default="exclude")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("profile", help="tie probability by two-path count")
    _add_input(p)
    p.add_argument("--csv")
    p.add_argument("--svg")
    p.add_argument("--title")
    p.add_argument("--include-isolates", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("generate", help="write a synthetic graph as an edge list")
    p.add_argument("family", choices=("er", "windmill", "cliques"))
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--p", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--r", type=int, default=4)
    p.add_argument("--sizes", type=_int_list, default=[3, 3])
    p.add_argument("--isolates", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify-windmill", help="check measures against windmill closed forms")
    p.add_argument("--m-range", type=_int_range, default=range(2, 7))
    p.add_argument("--r-range", type=_int_range, default=range(4, 9))
    p.set_defaults(func=cmd_verify_windmill)

    p = sub.add_parser("simulate-er", help="mean measures over Erdos-Renyi draws")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--densities", type=_float_list, default=[0.05, 0.1, 0.2, 0.3, 0.4, 0.5])
    p.add_argument("--reps", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_simulate_er)
    return parser

def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (GraphParseError, DegenerateGraphError, UsageError, ValueError, OSError) as exc:
        print(f"transcorr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

if __name__ == "__main__":
    sys.exit(main())
