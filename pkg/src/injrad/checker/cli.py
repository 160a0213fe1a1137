"""Command-line entry point.

    injrad info algebra.json
    injrad check algebra.json --cap 32
    injrad scan nakayama --shape cyclic --max-vertices 4 --max-len 6
    injrad scan radsq --max-vertices 3 --format csv --out radsq.csv

Exit status: 0 when no hard claim is violated, 2 when one is, 1 on any
operational error (bad input, unreadable file, bad arguments).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from ..algebra import DEFAULT_PRIME, algebra_id, ext_quiver
from ..errors import AlgebraError, ParseError
from ..homology import DEFAULT_CAP, global_dimension_by_path_graph, is_local, is_nakayama
from ..modules import injective, projective, radical_layer_dims
from .emit import EXIT_ERROR, EXIT_OK, emit
from .parse import read_algebra_file
from .report import check_algebra
from .scan import scan_nakayama, scan_radical_square_zero

GLOBAL_DEFAULTS = {
    "prime": DEFAULT_PRIME,
    "cap": DEFAULT_CAP,
    "seed": 0,
    "format": "jsonl",
    "out": None,
    "jobs": 1,
    "timing": False,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which would read as a violation
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    s = argparse.SUPPRESS
    p.add_argument("--prime", type=int, default=s, help=f"field size when the input gives none (default {DEFAULT_PRIME})")
    p.add_argument("--cap", type=int, default=s, help=f"longest resolution computed (default {DEFAULT_CAP})")
    p.add_argument("--seed", type=int, default=s, help="seed for randomized isomorphism tests (default 0)")
    p.add_argument("--format", choices=["jsonl", "csv"], default=s, help="record format (default jsonl)")
    p.add_argument("--out", default=s, help="output path (default stdout)")
    p.add_argument("--jobs", type=int, default=s, help="worker processes for scans (default 1)")
    p.add_argument("--timing", action="store_true", default=s, help="include per-algebra timing in JSONL")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = _Parser(prog="injrad", description="Check homological claims on monomial algebras.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    info = sub.add_parser("info", parents=[common], help="describe an algebra document")
    info.add_argument("file")

    check = sub.add_parser("check", parents=[common], help="evaluate every claim on one algebra")
    check.add_argument("file")

    scan = sub.add_parser("scan", help="evaluate every algebra of a family")
    families = scan.add_subparsers(dest="family", required=True, parser_class=_Parser)
    nak = families.add_parser("nakayama", parents=[common], help="Nakayama algebras by Kupisch series")
    nak.add_argument("--shape", choices=["linear", "cyclic"], required=True)
    nak.add_argument("--max-vertices", type=int, required=True)
    nak.add_argument("--max-len", type=int, default=None, help="bound on every c_i (required for cyclic)")
    radsq = families.add_parser("radsq", parents=[common], help="radical-square-zero algebras")
    radsq.add_argument("--max-vertices", type=int, required=True)
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    for k, v in GLOBAL_DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    if args.cap < 1:
        parser.error("--cap must be at least 1")
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    if args.command == "scan" and args.family == "nakayama" and args.shape == "cyclic" and args.max_len is None:
        parser.error("cyclic scans need --max-len")
    return args


def describe(a) -> dict:
    q = a.quiver
    return {
        "algebra_id": algebra_id(a),
        "prime": a.field.prime,
        "vertices": a.n,
        "arrows": [[x.name, x.source, x.target] for x in q.arrows],
        "relations": [a.label(r) for r in a.minimal_relations],
        "dimension": a.dimension,
        "loewy_length": a.loewy_length,
        "basis": [a.label(p) for p in a.basis],
        "projective_dims": [list(projective(a, i).dims) for i in q.vertices],
        "injective_dims": [list(injective(a, i).dims) for i in q.vertices],
        "projective_radical_layers": [[list(v) for v in radical_layer_dims(projective(a, i))] for i in q.vertices],
        "ext_quiver": [[x.source, x.target] for x in ext_quiver(a).arrows],
        "gldim": global_dimension_by_path_graph(a).to_json(),
        "local": is_local(a),
        "nakayama": is_nakayama(a),
    }


def _reports(args):
    if args.command == "check":
        a = read_algebra_file(args.file, args.prime)
        return [check_algebra(a, args.cap, args.seed, source=args.file)]
    if args.family == "nakayama":
        return scan_nakayama(args.shape, args.max_vertices, args.max_len, args.cap, args.seed, args.prime, args.jobs)
    return scan_radical_square_zero(args.max_vertices, args.cap, args.seed, args.prime, args.jobs)


def run(args) -> int:
    with contextlib.ExitStack() as stack:
        out = sys.stdout
        if args.out is not None:
            out = stack.enter_context(open(args.out, "w", encoding="utf-8", newline=""))
        if args.command == "info":
            a = read_algebra_file(args.file, args.prime)
            out.write(json.dumps(describe(a), indent=2) + "\n")
            return EXIT_OK
        return emit(_reports(args), args.format, out, include_timing=args.timing)


def main(argv=None) -> int:
    args = parse_args(argv)
    try:
        return run(args)
    except (ParseError, AlgebraError, OSError, ValueError) as e:
        print(f"injrad: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
