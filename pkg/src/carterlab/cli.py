"""Command-line interface: ``carterlab <command> [file] [options]``."""
from __future__ import annotations

import argparse
import json
import sys

from .catalog import catalog_lookup, families
from .commands import COMMANDS, run_command
from .config import Limits
from .corpus import run_corpus, write_corpus
from .errors import CarterLabError, ParseError
from .io import read_group_file, serialize_report


def _add_limits(p: argparse.ArgumentParser) -> None:
    d = Limits()
    p.add_argument("--limit-subgroups", type=int, default=d.subgroups,
                   help="largest group order for exhaustive subgroup enumeration (default %(default)s)")
    p.add_argument("--limit-pruned", type=int, default=d.pruned,
                   help="largest group order for the nilpotent-only Carter search (default %(default)s)")
    p.add_argument("--limit-degree", type=int, default=d.degree,
                   help="largest degree of a section realization (default %(default)s)")
    p.add_argument("--limit-overgroups", type=int, default=d.overgroups,
                   help="largest group order for full overgroup enumeration (default %(default)s)")
    p.add_argument("--format", choices=("text", "structured"), default="text")


def _limits(args: argparse.Namespace) -> Limits:
    return Limits(subgroups=args.limit_subgroups, pruned=args.limit_pruned, degree=args.limit_degree,
                  overgroups=args.limit_overgroups)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="carterlab", description="Carter subgroups of finite permutation groups")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=f"run the {name} check on one group file")
        p.add_argument("file", nargs="?", default="-", help="group file (default: standard input)")
        _add_limits(p)
    p = sub.add_parser("catalog", help="look up an almost simple socle family")
    p.add_argument("family", nargs="?", help="family name, e.g. alternating, E_6, A_l")
    p.add_argument("--l", type=int, dest="l")
    p.add_argument("--r", type=int, dest="r")
    p.add_argument("--t", type=int, dest="t")
    p.add_argument("--descriptor", default="{}", help="JSON object with facts about A")
    p.add_argument("--list", action="store_true", help="list the known families")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p = sub.add_parser("corpus", help="run a check over a directory of group files")
    p.add_argument("directory")
    p.add_argument("--command", choices=COMMANDS, default="theorem", dest="check")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--generate", action="store_true", help="write the standard corpus into the directory first")
    _add_limits(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    if args.command == "catalog":
        if args.list or not args.family:
            out.write("\n".join(families()) + "\n")
            return 0
        params = {k: getattr(args, k) for k in ("l", "r", "t") if getattr(args, k) is not None}
        try:
            res = catalog_lookup(args.family, params, json.loads(args.descriptor))
        except CarterLabError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        out.write(serialize_report(res, args.format))
        return 0
    limits = _limits(args)
    if args.command == "corpus":
        if args.generate:
            write_corpus(args.directory)
        summary = run_corpus(args.directory, args.check, limits, args.jobs)
        out.write(serialize_report(summary.as_record(), args.format))
        return summary.exit_code
    try:
        if args.file == "-":
            gf = read_group_file(sys.stdin.read())
        else:
            from pathlib import Path
            gf = read_group_file(Path(args.file))
        G = gf.group()
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    result = run_command(args.command, G, gf.id, limits)
    out.write(serialize_report(result.record, args.format))
    if result.record.get("status") == "error":
        return 2
    return 1 if result.violation else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
