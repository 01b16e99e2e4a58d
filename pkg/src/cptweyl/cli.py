"""Command line entry point: ``cptweyl verify | order | identify | state | catalogue``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .claims import builtin_claims, default_cache_dir, run
from .exactcore import ERRATA, build, catalogue_names, load_matrices
from .exactcore.catalogue import TranscriptionNotUnitary, UnknownMatrix
from .groupkit import (
    CapExceeded,
    MatrixGroup,
    enumerate_group,
    fingerprint,
    identify,
    order_fingerprint,
    perm_action,
)
from .groupkit.matgroup import ENUM_CAP
from .tangle import profile, profile_to_json, state_from_row


def _generators(files: Sequence[str], names: Sequence[str]) -> MatrixGroup:
    mats = []
    for path in files:
        mats.extend(load_matrices(path))
    mats.extend(build(n) for n in names)
    if not mats:
        raise SystemExit("no generators given (use --gens FILE or --names NAME)")
    return MatrixGroup(mats)


def cmd_verify(args) -> int:
    cache = None if args.no_cache else (args.cache or default_cache_dir())
    report = run(builtin_claims(), filter=args.claim, workers=args.workers, cache_dir=cache)
    print(report.table())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.dumps())
    return 0 if report.ok else 1


def cmd_order(args) -> int:
    group = _generators(args.gens, args.names)
    try:
        action = perm_action(group, cap=args.cap)
    except CapExceeded as exc:
        print(f"orbit exceeded cap {args.cap} after {exc.size_so_far} points", file=sys.stderr)
        return 2
    print(action.bsgs.order)
    return 0


def cmd_identify(args) -> int:
    group = _generators(args.gens, args.names)
    try:
        fp = fingerprint(enumerate_group(group, cap=args.cap))
    except CapExceeded:
        # too big to tabulate: the fingerprint carries the order alone
        fp = order_fingerprint(perm_action(group).bsgs.order)
    ident = identify(fp)
    print(json.dumps(fp.to_json(), sort_keys=True))
    print(ident)
    return 0


def cmd_state(args) -> int:
    try:
        m = build(args.matrix)
    except (UnknownMatrix, TranscriptionNotUnitary) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    state = state_from_row(m, args.row)
    prof = profile(state)
    if args.json:
        doc = profile_to_json(state, prof, {"matrix": args.matrix, "row": args.row})
        print(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False))
        return 0
    print(f"state: {state}")
    print(f"tau3     = {prof.tau3:.12g}")
    for k, v in prof.pairwise().items():
        print(f"tau_{k}   = {v:.12g}")
    for k, v in prof.one_tangles().items():
        print(f"tau_{k}(rest) = {v:.12g}")
    print(f"class    = {prof.class_label}")
    return 0


def cmd_catalogue(args) -> int:
    for name in catalogue_names():
        note = ""
        if name in ERRATA:
            note = f"  (printed table not unitary; see {ERRATA[name].corrected_name})"
        print(name + note)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cptweyl", description=__doc__)
    parser.add_argument("--version", action="version", version=f"cptweyl {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the claim registry")
    p.add_argument("--claim", metavar="PATTERN", help="shell-style id filter, e.g. 'TANGLE.*'")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p.add_argument("--workers", type=int, default=1, metavar="N")
    p.add_argument("--cache", metavar="DIR", help="order cache directory")
    p.add_argument("--no-cache", action="store_true", help="do not read or write the cache")
    p.set_defaults(func=cmd_verify)

    for name, func, cap, helptext in (
        ("order", cmd_order, ENUM_CAP, "exact group order"),
        ("identify", cmd_identify, 10**4, "fingerprint and reference label"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--gens", nargs="+", default=[], metavar="FILE",
                       help="matrix JSON files (one object or an array each)")
        p.add_argument("--names", nargs="+", default=[], metavar="NAME",
                       help="catalogue matrix names")
        p.add_argument("--cap", type=int, default=cap, metavar="N")
        p.set_defaults(func=func)

    p = sub.add_parser("state", help="entanglement profile of one matrix row")
    p.add_argument("--matrix", required=True, metavar="NAME")
    p.add_argument("--row", type=int, required=True, metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("catalogue", help="list built-in matrix names")
    p.set_defaults(func=cmd_catalogue)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8", line_buffering=True)
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
