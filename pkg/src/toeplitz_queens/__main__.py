# SPDX-License-Identifier: Apache-2.0

"""Unified CLI entry point for toeplitz-queens.

Exit codes: 0 success, 1 negative mathematical result or invalid placement,
2 usage, parse or cap error.
"""

import sys
import json
import logging
import traceback
import argparse

from toeplitz_queens import __version__
from toeplitz_queens.core.errors import (
    OutOfRegionError,
    SolvableBoardError,
    ToeplitzQueensError,
    UnsolvableBoardError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def _order(minimum, what="board order"):
    """argparse type for an integer of at least ``minimum``"""
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid {what} '{text}'")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"{what} must be at least {minimum}, got {value}")
        return value
    return parse


def _resolve_format(args):
    """Explicit --format wins; otherwise ASCII on a terminal, JSON when piped."""
    if getattr(args, 'format', None):
        return args.format
    return 'ascii' if sys.stdout.isatty() else 'json'


def _print_json(data):
    print(json.dumps(data, indent=2))


def _read_document(path):
    from toeplitz_queens.core.document import loads_placement

    if path and path != '-':
        with open(path, 'r', encoding='utf-8') as f:
            return loads_placement(f.read())
    return loads_placement(sys.stdin.read())


def _render_options(args, n):
    from toeplitz_queens.utils.config import load_render_defaults
    from toeplitz_queens.utils.render import RenderOptions, minimum_cell_width

    defaults = load_render_defaults()
    return RenderOptions(
        show_values=getattr(args, 'values', False),
        queen_glyph=getattr(args, 'glyph', None) or defaults.get('queen_glyph', 'Q'),
        cell_width=max(int(defaults.get('cell_width', 3)), minimum_cell_width(n)),
    )


def _report_certificate(certificate, fmt):
    from toeplitz_queens.core.certificate import certificate_explanation

    if fmt == 'json':
        _print_json({'certificate': certificate.to_dict()})
    else:
        print(certificate_explanation(certificate))


def _output_generator(args):
    from toeplitz_queens.search.output_generator import OutputGenerator
    from toeplitz_queens.utils.paths import get_default_results_dir

    return OutputGenerator(args.output_dir or str(get_default_results_dir()))


def cmd_solve(args):
    """Construct a solution, or print the infeasibility certificate."""
    from toeplitz_queens.construct.solution import construct_placement
    from toeplitz_queens.construct.trace import explain_trace, trace_to_document
    from toeplitz_queens.core.board import BoardSpec, Variant
    from toeplitz_queens.core.document import placement_to_document
    from toeplitz_queens.core.errors import ConstructionInvariantError
    from toeplitz_queens.core.verify import verify_placement
    from toeplitz_queens.utils.render import render_board

    fmt = _resolve_format(args)
    variant = Variant.parse(args.variant)
    try:
        placement, trace = construct_placement(args.n, variant)
    except UnsolvableBoardError as e:
        _report_certificate(e.certificate, fmt)
        return EXIT_NEGATIVE

    spec = BoardSpec(args.n, variant)
    result = verify_placement(placement, spec)
    if not result:
        raise ConstructionInvariantError(f"constructed placement failed verification: {result.detail}")

    if fmt == 'json':
        doc = placement_to_document(placement, variant)
        _print_json({'placement': doc, 'trace': trace_to_document(trace)} if args.trace else doc)
    else:
        print(render_board(placement, spec, _render_options(args, args.n)))
        if args.trace:
            print()
            print(explain_trace(trace))
    return EXIT_OK


def cmd_nm1(args):
    """Place n-1 nonattacking queens."""
    from toeplitz_queens.construct.independent import construct_n_minus_1
    from toeplitz_queens.core.board import BoardSpec
    from toeplitz_queens.core.document import placement_to_document
    from toeplitz_queens.core.errors import ConstructionInvariantError
    from toeplitz_queens.core.verify import verify_nonattacking
    from toeplitz_queens.utils.render import render_board

    placement = construct_n_minus_1(args.n)
    if not verify_nonattacking(placement, BoardSpec(args.n)):
        raise ConstructionInvariantError(f"n-1 placement for n = {args.n} is attacking")

    if _resolve_format(args) == 'json':
        _print_json(placement_to_document(placement))
    else:
        print(render_board(placement, options=_render_options(args, args.n)))
    return EXIT_OK


def cmd_verify(args):
    """Check a placement document against its declared variant."""
    from toeplitz_queens.core.verify import verify_placement

    placement, spec = _read_document(args.file)
    result = verify_placement(placement, spec)
    if _resolve_format(args) == 'json':
        _print_json(result.to_dict())
    elif result:
        print(f"OK: valid solution of the {spec}")
    else:
        print(f"INVALID ({result.reason.value}): {result.detail}")
    return EXIT_OK if result else EXIT_NEGATIVE


def cmd_enumerate(args):
    """Exhaustive enumeration report."""
    from toeplitz_queens.search.orbits import build_report
    from toeplitz_queens.search.output_generator import enumeration_to_document

    report = build_report(
        args.n,
        count_only=args.count_only,
        fundamental=args.fundamental,
        cap=args.cap,
        workers=args.workers,
    )
    _print_json(enumeration_to_document(report))
    if args.output or args.save:
        _output_generator(args).write_enumeration(report, args.output)
    return EXIT_OK


def cmd_dominate(args):
    """Domination number by iterative deepening."""
    from toeplitz_queens.core.errors import ConstructionInvariantError
    from toeplitz_queens.search.domination import covers_board, domination_number
    from toeplitz_queens.search.output_generator import domination_to_document
    from toeplitz_queens.utils.render import render_board
    from toeplitz_queens.utils.templates import render_template

    report = domination_number(args.n, cap=args.cap)
    if not covers_board(report.witness, args.n):
        raise ConstructionInvariantError(f"domination witness for n = {args.n} does not cover the board")

    if _resolve_format(args) == 'json':
        _print_json(domination_to_document(report))
    else:
        board = render_board(report.witness, options=_render_options(args, args.n))
        print(render_template('domination.txt', report=report, board=board))
    if args.output or args.save:
        _output_generator(args).write_domination(report, args.output)
    return EXIT_OK


def cmd_certificate(args):
    """Infeasibility certificate for n = 2, 3 (mod 4)."""
    from toeplitz_queens.core.certificate import infeasibility_certificate

    _report_certificate(infeasibility_certificate(args.n), _resolve_format(args))
    return EXIT_OK


def cmd_render(args):
    """Draw a placement document as an ASCII board."""
    from toeplitz_queens.utils.render import render_board

    placement, spec = _read_document(args.file)
    print(render_board(placement, spec, _render_options(args, spec.n)))
    return EXIT_OK


def cmd_explain(args):
    """Narrate the recursive construction."""
    from toeplitz_queens.construct.solution import construct_solution
    from toeplitz_queens.construct.trace import check_trace, explain_trace
    from toeplitz_queens.core.errors import ConstructionInvariantError

    try:
        _, trace = construct_solution(args.n)
    except UnsolvableBoardError as e:
        _report_certificate(e.certificate, 'ascii')
        return EXIT_NEGATIVE

    problems = check_trace(trace)
    if problems:
        raise ConstructionInvariantError("; ".join(problems))
    print(explain_trace(trace))
    return EXIT_OK


def cmd_census(args):
    """Table of solvability and counts over a range of orders."""
    from toeplitz_queens.search.census import CENSUS_HEADERS, census

    if args.stop < args.start:
        raise ToeplitzQueensError(f"empty range {args.start}..{args.stop}")
    rows = census(args.start, args.stop, cap=args.cap, workers=args.workers)

    widths = [max(len(h), *(len('' if r[k] is None else str(r[k])) for r in rows)) for k, h in enumerate(CENSUS_HEADERS)]
    print("  ".join(h.ljust(w) for h, w in zip(CENSUS_HEADERS, widths)).rstrip())
    for row in rows:
        print("  ".join(('' if v is None else str(v)).ljust(w) for v, w in zip(row, widths)).rstrip())

    if args.output or args.save:
        _output_generator(args).write_census(rows, args.start, args.stop, args.output)
    return EXIT_OK


def cmd_config(args):
    """Show the effective configuration, or write the defaults for editing."""
    from toeplitz_queens.utils.config import load_caps, load_config, write_config_file
    from toeplitz_queens.utils.paths import CONFIG_FILE, get_config_location_message, get_writable_path

    if args.init:
        target = get_writable_path(CONFIG_FILE)
        if target.exists() and not args.force:
            logger.error(f"{target} already exists (use --force to overwrite)")
            return EXIT_USAGE
        write_config_file(target, load_config())
        logger.info(f"✓ Saved: {target}")
        return EXIT_OK

    print(get_config_location_message())
    config = load_config()
    _print_json({'caps': load_caps(), 'workers': config.get('workers'), 'render': config.get('render', {})})
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog='tq',
        description='Toeplitz Queens - nonattacking queens on the symmetric Toeplitz board T_n'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='store_true', help='Debug logging')
    parser.add_argument('-q', '--quiet', action='store_true', help='Only log warnings and errors')
    parser.add_argument('-w', '--workers', type=_order(1, "worker count"),
                        help='Worker processes for exhaustive search (default: config, then one per CPU)')
    parser.add_argument('-o', '--output-dir',
                        help='Directory for saved result files (default: <data dir>/results)')
    subparsers = parser.add_subparsers(dest='command')

    def add_format(p):
        p.add_argument('--format', choices=['json', 'ascii'],
                       help='Output format (default: ascii on a terminal, json when piped)')

    def add_save(p):
        p.add_argument('--output', metavar='FILE', help='Write the result file to FILE (overwrites)')
        p.add_argument('--save', action='store_true', help='Write a timestamped result file to the results directory')

    # solve
    p_solve = subparsers.add_parser('solve', help='Construct a solution or print an infeasibility certificate')
    p_solve.add_argument('n', type=_order(1), help='Board order')
    p_solve.add_argument('--variant', default='full', choices=['full', 'star', 'double-star'],
                         help='Board variant (default: full)')
    p_solve.add_argument('--trace', action='store_true', help='Include the construction trace')
    add_format(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    # nm1
    p_nm1 = subparsers.add_parser('nm1', help='Place n-1 nonattacking queens')
    p_nm1.add_argument('n', type=_order(2), help='Board order (at least 2)')
    add_format(p_nm1)
    p_nm1.set_defaults(func=cmd_nm1)

    # verify
    p_verify = subparsers.add_parser('verify', help='Verify a JSON placement document')
    p_verify.add_argument('file', nargs='?', help='Placement document (default: standard input)')
    add_format(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    # enumerate
    p_enum = subparsers.add_parser('enumerate', help='Enumerate or count all solutions')
    p_enum.add_argument('n', type=_order(1), help='Board order')
    p_enum.add_argument('--count-only', action='store_true', help='Count without listing solutions')
    p_enum.add_argument('--fundamental', action='store_true', help='Group solutions into symmetry orbits')
    p_enum.add_argument('--cap', type=_order(1, "cap"), help='Override the enumeration (or count) cap')
    add_save(p_enum)
    p_enum.set_defaults(func=cmd_enumerate)

    # dominate
    p_dom = subparsers.add_parser('dominate', help='Compute the domination number')
    p_dom.add_argument('n', type=_order(1), help='Board order')
    p_dom.add_argument('--cap', type=_order(1, "cap"), help='Override the domination cap')
    add_format(p_dom)
    add_save(p_dom)
    p_dom.set_defaults(func=cmd_dominate)

    # certificate
    p_cert = subparsers.add_parser('certificate', help='Print the infeasibility certificate')
    p_cert.add_argument('n', type=_order(1), help='Board order')
    add_format(p_cert)
    p_cert.set_defaults(func=cmd_certificate)

    # render
    p_render = subparsers.add_parser('render', help='Draw a placement document')
    p_render.add_argument('file', nargs='?', help='Placement document (default: standard input)')
    p_render.add_argument('--values', action='store_true', help='Show |i-j| in empty squares')
    p_render.add_argument('--glyph', help='Queen character (default: Q)')
    p_render.set_defaults(func=cmd_render)

    # explain
    p_explain = subparsers.add_parser('explain', help='Narrate the recursive construction')
    p_explain.add_argument('n', type=_order(1), help='Board order')
    p_explain.set_defaults(func=cmd_explain)

    # census
    p_census = subparsers.add_parser('census', help='Tabulate counts over a range of orders')
    p_census.add_argument('start', type=_order(1), help='First order')
    p_census.add_argument('stop', type=_order(1), help='Last order')
    p_census.add_argument('--cap', type=_order(1, "cap"), help='Largest order to enumerate')
    add_save(p_census)
    p_census.set_defaults(func=cmd_census)

    # config
    p_config = subparsers.add_parser('config', help='Show or initialize configuration')
    p_config.add_argument('--init', action='store_true', help='Write the effective configuration to config.yml')
    p_config.add_argument('--force', action='store_true', help='Overwrite an existing config.yml')
    p_config.set_defaults(func=cmd_config)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format='%(message)s')
    logging.getLogger().setLevel(level)

    if not args.command:
        parser.print_help()
        sys.exit(EXIT_USAGE)

    try:
        status = args.func(args)
    except (SolvableBoardError, UnsolvableBoardError, OutOfRegionError) as e:
        logger.error(f"Error: {e}")
        status = EXIT_NEGATIVE
    except ToeplitzQueensError as e:
        logger.error(f"Error: {e}")
        status = EXIT_USAGE
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"Error: {e}")
        status = EXIT_USAGE
    except KeyboardInterrupt:
        logger.info("\nOperation cancelled by user.")
        status = EXIT_USAGE
    except Exception as e:
        logger.error(f"Error: {e}")
        traceback.print_exc()
        status = EXIT_USAGE
    sys.exit(status)


if __name__ == '__main__':
    main()
