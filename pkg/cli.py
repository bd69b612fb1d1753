#!/usr/bin/env python3
"""
Category O Toolkit CLI

Command-line interface for the category O toolkit with structured error
reporting and logging. Documents go to standard output, logs to standard error.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from category_o.errors import CategoryOError
from category_o.jh_labels import SmoothLabel
from category_o.roots import RootSystem, root_system
from category_o.weyl import ParabolicSubset
from category_o_main import (
    AUDIT_MODES,
    Report,
    audit_abcd,
    audit_coefficients,
    audit_commutator,
    audit_finiteness,
    audit_injectivity,
    bgg_report,
    drinfeld_report,
    jh_report,
    rootsys_report,
    verma_report,
    weyl_report,
)
from category_o_settings import get_toolkit_config


def setup_logging(verbose: bool = False) -> None:
    """
    Configure logging based on verbosity level.

    Args:
        verbose: If True, enable debug-level logging; otherwise INFO level
    """
    log_level = logging.DEBUG if verbose else logging.INFO
    log_format = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

    # stdout is reserved for the emitted document
    logging.basicConfig(
        level=log_level,
        format=log_format,
        handlers=[
            logging.StreamHandler(sys.stderr)
        ]
    )

    if verbose:
        logging.getLogger('category_o').setLevel(logging.DEBUG)
        logging.getLogger('category_o_settings').setLevel(logging.DEBUG)
    else:
        logging.getLogger('category_o').setLevel(logging.INFO)
        logging.getLogger('category_o_settings').setLevel(logging.WARNING)


def _add_type_flags(parser: argparse.ArgumentParser, default: Optional[str] = "A2") -> None:
    parser.add_argument('--type', '-t', dest='cartan_type', default=default, help=f'Cartan type such as A2, B3, G2 or GL (default: {default})')
    parser.add_argument('--gl-dim', type=int, help='n for GL_n when --type GL is given')


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--format', choices=['json', 'table'], default='json', help='Output format (default: json)')
    parser.add_argument('--verbose', '-v', action='store_true', help='Enable verbose debug output and detailed logging')


def _gamma(text: Optional[str]):
    if text is None:
        return None
    try:
        return tuple(int(c) for c in text.split(",") if c.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid root {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cli.py",
        description="Category O Toolkit - exact computations in parabolic category O",
        epilog="Example: python cli.py jh --type A1 --parabolic '' --verma-weight 0 --smooth trivial",
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('rootsys', help='Root data and Chevalley constants')
    _add_type_flags(p)
    _add_common_flags(p)

    p = sub.add_parser('weyl', help='Minimal coset representatives of a parabolic subgroup')
    _add_type_flags(p)
    p.add_argument('--parabolic', '-I', default='', help='Comma list of simple-root indices (empty: Borel)')
    p.add_argument('--weight', '-w', help='Optional weight whose dot-translates are listed')
    _add_common_flags(p)

    p = sub.add_parser('verma', help='Truncated Verma module and its simple quotient')
    _add_type_flags(p)
    p.add_argument('--weight', '-w', required=True, help='Highest weight as a comma tuple')
    p.add_argument('--depth', '-D', type=int, help='Window depth (default depends on the rank)')
    p.add_argument('--jh', action='store_true', help='Also compute the composition factors by brute force')
    p.add_argument('--cache-dir', help='Directory for cached windows')
    _add_common_flags(p)

    p = sub.add_parser('bgg', help='Parabolic BGG resolution and its locally analytic dual')
    _add_type_flags(p)
    p.add_argument('--weight', '-w', required=True, help='Dominant integral weight as a comma tuple')
    p.add_argument('--parabolic', '-I', default='', help='Comma list of simple-root indices (empty: Borel)')
    p.add_argument('--depth', '-D', type=int, help='Depth of the Euler characteristic check')
    _add_common_flags(p)

    p = sub.add_parser('jh', help='Jordan-Hölder constituents of an induced representation')
    _add_type_flags(p)
    p.add_argument('--verma-weight', required=True, help='lambda of the Verma module M(lambda)')
    p.add_argument('--parabolic', '-I', default='', help='Comma list of simple-root indices (empty: Borel)')
    p.add_argument('--smooth', default='trivial', help="Smooth representation: 'trivial' or 'opaque:NAME[:irreducible]'")
    p.add_argument('--depth', '-D', type=int, help='Window depth (default: deepest linked weight)')
    p.add_argument('--prime', '-p', type=int, help='Residue characteristic')
    _add_common_flags(p)

    p = sub.add_parser('drinfeld', help='Line bundles on the Drinfeld half space')
    p.add_argument('--d', type=int, required=True, help='Dimension of projective space')
    p.add_argument('--r', type=int, required=True, help='First entry of lambda = (r, s, ..., s)')
    p.add_argument('--s', type=int, required=True, help='Remaining entries of lambda')
    p.add_argument('--depth', '-D', type=int, default=4, help='Height of the local cohomology windows (default: 4)')
    _add_common_flags(p)

    p = sub.add_parser('audit', help='Brute-force checks of the auxiliary lemmas')
    p.add_argument('mode', choices=AUDIT_MODES)
    _add_type_flags(p)
    p.add_argument('--weight', '-w', help='Highest weight as a comma tuple')
    p.add_argument('--gamma', type=_gamma, help='Positive root in simple-root coordinates (default: all)')
    p.add_argument('--n', type=int, default=2, help='Power n (default: 2; finiteness raises it to |<lambda, gamma^vee>| + 1)')
    p.add_argument('--k', type=int, default=2, help='Power k for the commutator check (default: 2)')
    p.add_argument('--depth', '-D', type=int, help='Window depth')
    p.add_argument('--prime', '-p', type=int, help='Residue characteristic')
    _add_common_flags(p)
    return parser


def _root_system(args) -> RootSystem:
    return root_system(args.cartan_type, args.gl_dim)


def run_command(args) -> Report:
    if args.command == 'drinfeld':
        return drinfeld_report(args.d, args.r, args.s, args.depth)
    rs = _root_system(args)
    if args.command == 'rootsys':
        return rootsys_report(rs)
    if args.command == 'weyl':
        weight = rs.parse_weight(args.weight) if args.weight else None
        return weyl_report(rs, ParabolicSubset.parse(args.parabolic, rs.rank), weight)
    if args.command == 'verma':
        return verma_report(rs, rs.parse_weight(args.weight), args.depth, args.cache_dir, args.jh)
    if args.command == 'bgg':
        return bgg_report(rs, rs.parse_weight(args.weight), ParabolicSubset.parse(args.parabolic, rs.rank), args.depth)
    if args.command == 'jh':
        return jh_report(
            rs,
            rs.parse_weight(args.verma_weight),
            ParabolicSubset.parse(args.parabolic, rs.rank),
            SmoothLabel.parse(args.smooth),
            args.depth,
            args.prime,
        )
    # audit
    if args.mode == 'abcd':
        return audit_abcd(rs, args.n, args.gamma)
    weight = rs.parse_weight(args.weight) if args.weight else rs.zero_weight()
    if args.mode == 'coefficients':
        return audit_coefficients(rs, weight, args.n, args.gamma, args.prime)
    if args.mode == 'commutator':
        return audit_commutator(rs, weight, args.k, args.n)
    if args.mode == 'finiteness':
        return audit_finiteness(rs, weight, args.n, args.gamma, args.depth)
    return audit_injectivity(rs, weight, args.depth, args.gamma)


def emit(document, fmt: str = 'json', report: Optional[Report] = None) -> None:
    if fmt == 'table' and report is not None:
        print(report.render_tables())
    else:
        print(json.dumps(document, sort_keys=True, indent=2))


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    setup_logging(args.verbose)
    logger = logging.getLogger(__name__)
    schema = get_toolkit_config()["schema_version"]

    try:
        logger.debug(f"Running {args.command} with {vars(args)}")
        report = run_command(args)
        report.document["schema"] = schema
        emit(report.document, args.format, report)
        logger.info("Process completed successfully")
        return 0

    except CategoryOError as e:
        logger.error(f"{e.code}: {e.message}")
        emit({"schema": schema, "error": e.to_dict()})
        return 1

    except KeyboardInterrupt:
        logger.info("Process interrupted by user")
        return 130

    except Exception as e:
        logger.error(f"Unexpected error: {e}")
        if args.verbose:
            logger.debug("Full error details:", exc_info=True)
        emit({"schema": schema, "error": {"code": "internal", "message": str(e), "details": {}}})
        return 1


if __name__ == "__main__":
    sys.exit(main())
