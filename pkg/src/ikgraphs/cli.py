"""Command-line entry point."""

from __future__ import annotations

import argparse
import sys

from .enumeration import TYPE_TAGS
from .graph6 import Graph6Error
from .pipeline import RunConfig, cmd_certify, cmd_enumerate, cmd_families, cmd_reduce, cmd_verify_theorem


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    common.add_argument("--out", default="out", help="output directory (default ./out)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised traversal order")

    p = argparse.ArgumentParser(prog="ikgraphs", description="Triangle-free 22-edge IK graph census tools.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("families", parents=[common], help="generate the K7, K3311 and E9+e families")
    e = sub.add_parser("enumerate", parents=[common], help="enumerate one degree type")
    e.add_argument("--type", required=True, choices=sorted(TYPE_TAGS))
    v = sub.add_parser("verify-theorem", parents=[common], help="run the full classification")
    v.add_argument("--type", action="append", choices=sorted(TYPE_TAGS),
                   help="restrict to these types (repeatable; default all)")
    r = sub.add_parser("reduce", parents=[common], help="reduce a graph at a vertex pair")
    r.add_argument("graph6")
    r.add_argument("a", type=int)
    r.add_argument("b", type=int)
    c = sub.add_parser("certify", parents=[common], help="search for an IK minor certificate")
    c.add_argument("graph6")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("reduce", "certify"):
            if args.command == "reduce":
                cmd_reduce(args.graph6, args.a, args.b)
            else:
                cmd_certify(args.graph6)
            return 0
        if args.command == "enumerate":
            types = (args.type,)
        else:
            types = tuple(getattr(args, "type", None) or TYPE_TAGS)
        mode = {"families": "families", "enumerate": "enumerate"}.get(args.command, "full")
        config = RunConfig(types=types, jobs=args.jobs, out=args.out, seed=args.seed, mode=mode)
        if args.command == "families":
            cmd_families(config)
            return 0
        if args.command == "enumerate":
            cmd_enumerate(args.type, config)
            return 0
        return cmd_verify_theorem(config)
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
