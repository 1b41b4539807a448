#!/usr/bin/env python3
"""
treebound - Main Entry Point
Zeroth-order general Randić index vs. domination number on trees
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

import ujson

# Add app directory to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from app.bounds.theorems import bounds_for
from app.enumeration.free_trees import free_trees
from app.errors import TreeboundError
from app.families.builders import family_members
from app.families.kinds import FamilyKind, FamilyTag
from app.graph.canonical import canonical_code
from app.graph.tree import dump_tree, load_tree
from app.invariants.domination import domination_number
from app.invariants.randic import zeroth_order_general_randic
from app.pipeline.verification_pipeline import get_pipeline
from app.reporting.report_formatter import FORMATS, emit_report
from app.utils.safe_logger import safe_print, setup_logging
from config import DEFAULT_ALPHA_GRID, DEFAULT_JOBS, LOG_FILE, LOG_LEVEL

logger = logging.getLogger(__name__)


def print_banner():
    """Print application banner"""
    try:
        banner = """
╔══════════════════════════════════════════════════════════╗
║                    🌲 TREEBOUND                          ║
║     ⁰R_α vs. domination number γ on n-vertex trees       ║
║                                                          ║
║  enumerate · index · gamma · bounds · family · verify    ║
╚══════════════════════════════════════════════════════════╝
"""
        print(banner)
    except UnicodeEncodeError:
        print("=" * 60)
        print("TREEBOUND - 0R_alpha vs. domination number gamma on trees")
        print("enumerate | index | gamma | bounds | family | verify")
        print("=" * 60)


def _parse_alphas(text: str) -> List[float]:
    if not text.strip():
        return []
    try:
        return [float(part) for part in text.split(',') if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid alpha list '{text}': {e}")


def _attach_alpha_values(argv: List[str]) -> List[str]:
    """Rewrite `--alphas -1,0.5` as `--alphas=-1,0.5`; argparse reads a leading minus as an option"""
    out: List[str] = []
    i = 0
    while i < len(argv):
        if argv[i] == '--alphas' and i + 1 < len(argv):
            out.append(f"--alphas={argv[i + 1]}")
            i += 2
            continue
        out.append(argv[i])
        i += 1
    return out


def cmd_enumerate(args: argparse.Namespace) -> int:
    for tree in free_trees(args.order):
        print(str(canonical_code(tree)) if args.format == 'codes' else dump_tree(tree))
    return 0


def cmd_index(args: argparse.Namespace) -> int:
    tree = load_tree(args.tree)
    print(zeroth_order_general_randic(tree, args.alpha))
    return 0


def cmd_gamma(args: argparse.Namespace) -> int:
    tree = load_tree(args.tree)
    print(ujson.dumps(domination_number(tree).to_dict()))
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    if not args.all_gamma and args.gamma is None:
        raise TreeboundError("bounds needs --gamma or --all-gamma")
    gammas = range(1, args.order // 2 + 1) if args.all_gamma else [args.gamma]
    results = [b.to_dict() for g in gammas for b in bounds_for(args.order, g, args.alpha)]
    print(ujson.dumps(results, ensure_ascii=False))
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    kind = FamilyKind(FamilyTag(args.kind), args.order, args.gamma)
    members = family_members(kind)
    for tree in members if args.all else members[:1]:
        print(dump_tree(tree))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    alphas = DEFAULT_ALPHA_GRID if args.alphas is None else args.alphas
    pipeline = get_pipeline(args.jobs)
    reports = pipeline.verify(args.min_order, args.max_order, alphas)
    payload = emit_report(reports, args.format, include_runtime=not args.no_runtime)

    if args.out:
        with open(args.out, 'wb') as f:
            f.write(payload)
        logger.info(f"Report written to {args.out}")
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.write(b'\n')
        sys.stdout.flush()

    results = pipeline.get_last_results() or {}
    return 0 if results.get('success') else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='treebound',
        description="Zeroth-order general Randić index and domination number of trees",
    )
    parser.add_argument('--log-level', default=LOG_LEVEL, help="DEBUG, INFO, WARNING or ERROR")
    sub = parser.add_subparsers(dest='command')

    s = sub.add_parser('enumerate', help="List every free tree of an order, one per line")
    s.add_argument('--order', type=int, required=True)
    s.add_argument('--format', choices=['json', 'codes'], default='json')
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser('index', help="Zeroth-order general Randić index of a tree file")
    s.add_argument('--tree', required=True, help="edge-list JSON file")
    s.add_argument('--alpha', type=float, required=True)
    s.set_defaults(func=cmd_index)

    s = sub.add_parser('gamma', help="Domination number with a witness set")
    s.add_argument('--tree', required=True, help="edge-list JSON file")
    s.set_defaults(func=cmd_gamma)

    s = sub.add_parser('bounds', help="Applicable bounds as a JSON array")
    s.add_argument('--order', type=int, required=True)
    s.add_argument('--gamma', type=int)
    s.add_argument('--alpha', type=float, required=True)
    s.add_argument('--all-gamma', action='store_true', help="every gamma in 1..n/2")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser('family', help="Build extremal family members")
    s.add_argument('--kind', choices=[t.value for t in FamilyTag], required=True)
    s.add_argument('--order', type=int, required=True)
    s.add_argument('--gamma', type=int, required=True)
    s.add_argument('--all', action='store_true', help="every member instead of the first")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser('verify', help="Certify every bound over all trees in an order range")
    s.add_argument('--min-order', type=int, required=True)
    s.add_argument('--max-order', type=int, required=True)
    s.add_argument('--alphas', type=_parse_alphas, default=None, help='comma-separated, e.g. "--alphas -1,0.5,2" or "--alphas=-1,0.5,2"')
    s.add_argument('--format', choices=list(FORMATS), default='json')
    s.add_argument('--jobs', type=int, default=DEFAULT_JOBS)
    s.add_argument('--out', help="write the report here instead of stdout")
    s.add_argument('--no-runtime', action='store_true', help="omit runtime_ms from JSON output")
    s.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_attach_alpha_values(sys.argv[1:] if argv is None else list(argv)))
    setup_logging(args.log_level, LOG_FILE)

    if not getattr(args, 'func', None):
        print_banner()
        parser.print_help()
        return 0

    try:
        return args.func(args)
    except (TreeboundError, OSError) as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        safe_print(f"❌ {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
