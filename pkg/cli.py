# cli.py
"""
Command-line interface untuk engine reduced word.

Contoh:
    python cli.py perm info 51342
    python cli.py words enumerate 35124 --count-only
    python cli.py family verify 5
    python cli.py verify all --max-n 8

Exit status: 0 sukses/lulus, 1 verifikasi gagal, 2 kesalahan input.
"""

import argparse
import json
import logging
import os
import sys
from typing import Dict, List, Optional

import pandas as pd

from config import FAMILY_MAX_N, SERIES_MAX_N, VERIFY_MAX_N
from core.errors import CombinatoricsError, ConsistencyError
from core.family import (
    FamilyVerifier, corrected_numerator_text, family_permutation,
    generating_series_check, printed_numerator_text,
)
from core.graphcore import graph_to_dict, isomorphism_chain, to_dot, to_json
from core.notation import format_partition, format_set, word_key
from core.perm import (
    Permutation, ascent_set, cycle_type, descent_set, fixed_points, inverse,
    is_grassmannian, lehmer_code, length,
)
from core.simplex import (
    build_lattice_graph, gaussian_binomial_k2, points_frame, slice_counts,
)
from core.tableaux import tableaux_frame
from core.verification import Verifier
from core.words import build_word_graph, count_reduced_words, enumerate_reduced_words

logger = logging.getLogger('cli')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _emit_json(data) -> None:
    print(json.dumps(data, sort_keys=True, ensure_ascii=False))


def _emit_fields(fields: Dict[str, object]) -> None:
    """Baris 'key  value' dengan kolom rata kiri."""
    width = max(len(k) for k in fields)
    for key, value in fields.items():
        print(f"{key.ljust(width)}  {value}")


def _emit_frame(frame: pd.DataFrame) -> None:
    if frame.empty:
        print("(empty)")
    else:
        print(frame.to_string(index=False))


# ----------------------------------------------------------------------
# perm
# ----------------------------------------------------------------------
def cmd_perm_info(args) -> int:
    w = Permutation.parse(args.permutation)
    grassmannian, position = is_grassmannian(w)
    fields = {
        'permutation': str(w),
        'n': w.n,
        'length': length(w),
        'descents': format_set(descent_set(w)),
        'ascents': format_set(ascent_set(w)),
        'cycle_type': format_partition(cycle_type(w).parts),
        'fixed_points': format_set(fixed_points(w)),
        'lehmer_code': '(' + ','.join(str(c) for c in lehmer_code(w)) + ')',
        'inverse': str(inverse(w)),
        'grassmannian': f"yes (descent at {position})" if grassmannian else 'no',
    }
    if args.json:
        _emit_json({
            'permutation': list(w.values),
            'length': length(w),
            'descents': sorted(descent_set(w)),
            'ascents': sorted(ascent_set(w)),
            'cycle_type': list(cycle_type(w).parts),
            'fixed_points': sorted(fixed_points(w)),
            'lehmer_code': list(lehmer_code(w)),
            'inverse': list(inverse(w).values),
            'grassmannian_descent': position,
        })
    else:
        _emit_fields(fields)
    return EXIT_OK


# ----------------------------------------------------------------------
# words
# ----------------------------------------------------------------------
def cmd_words_enumerate(args) -> int:
    w = Permutation.parse(args.permutation)
    if args.count_only:
        count = count_reduced_words(w)
        if args.json:
            _emit_json({'permutation': str(w), 'count': count})
        else:
            print(count)
        return EXIT_OK

    words = [word_key(a, w.n) for a in enumerate_reduced_words(w, max_words=args.max_words)]
    if args.json:
        _emit_json({'permutation': str(w), 'count': len(words), 'words': words})
    else:
        for key in words:
            print(key)
    return EXIT_OK


def cmd_words_graph(args) -> int:
    w = Permutation.parse(args.permutation)
    G = build_word_graph(w, max_words=args.max_words)
    sys.stdout.write(to_json(G) if args.format == 'json' else to_dot(G))
    return EXIT_OK


# ----------------------------------------------------------------------
# family
# ----------------------------------------------------------------------
def cmd_family_verify(args) -> int:
    report = FamilyVerifier(max_n=args.max_n).verify(args.n)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print(f"family _{args.n}w = {family_permutation(args.n)}")
        _emit_frame(report.to_frame())
        print(f"result: {'pass' if report.pass_ else 'FAIL'}")
    return EXIT_OK if report.pass_ else EXIT_FAILED


def cmd_family_series(args) -> int:
    report = generating_series_check(args.max_n)
    ok = report.passed
    if args.json:
        _emit_json({
            'max_n': report.max_n,
            'derived': {m: list(p.coeffs) for m, p in enumerate(report.derived) if not p.is_zero()},
            'printed': {m: list(p.coeffs) for m, p in enumerate(report.printed) if not p.is_zero()},
            'brute_force': {m: list(p.coeffs) for m, p in report.brute.items()},
            'difference': {m: list(p.coeffs) for m, p in report.difference.items()},
            'printed_numerator': printed_numerator_text(),
            'corrected_numerator': corrected_numerator_text(),
            'pass': ok,
        })
    else:
        _emit_frame(report.to_frame())
        _emit_fields({
            'printed numerator': printed_numerator_text(),
            'corrected numerator': corrected_numerator_text(),
            'printed - derived': report.difference_text(),
            'result': 'pass' if ok else 'FAIL',
        })
    return EXIT_OK if ok else EXIT_FAILED


# ----------------------------------------------------------------------
# tableaux
# ----------------------------------------------------------------------
def cmd_tableaux_list(args) -> int:
    frame = tableaux_frame(args.n, args.recording_only)
    if args.json:
        _emit_json(frame.to_dict(orient='records'))
    else:
        display = frame.copy()
        display['first_row'] = display['first_row'].map(lambda row: ''.join(map(str, row)))
        _emit_frame(display)
    return EXIT_OK


# ----------------------------------------------------------------------
# simplex
# ----------------------------------------------------------------------
def cmd_simplex_points(args) -> int:
    frame = points_frame(args.k)
    if args.json:
        _emit_json(frame.to_dict(orient='records'))
    else:
        _emit_frame(frame)
    return EXIT_OK


def cmd_simplex_gaussian(args) -> int:
    poly = gaussian_binomial_k2(args.k)
    if args.json:
        _emit_json({'k': args.k, 'coefficients': list(poly.coeffs), 'slice_counts': slice_counts(args.k)})
    else:
        _emit_fields({
            'k': args.k,
            'gaussian': poly.to_string('q'),
            'slice_counts': ' '.join(str(c) for c in slice_counts(args.k)),
            'value_at_1': poly(1),
        })
    return EXIT_OK


def cmd_simplex_graph(args) -> int:
    G = build_lattice_graph(args.k)
    sys.stdout.write(to_json(G) if args.format == 'json' else to_dot(G))
    return EXIT_OK


# ----------------------------------------------------------------------
# iso
# ----------------------------------------------------------------------
def _write_chain(report, outdir: str, emit: str) -> None:
    os.makedirs(outdir, exist_ok=True)
    for name, G in report.graphs.items():
        path = os.path.join(outdir, f"{name}.{emit}")
        with open(path, 'w', encoding='utf-8') as fh:
            fh.write(to_dot(G) if emit == 'dot' else to_json(G))
    with open(os.path.join(outdir, 'maps.json'), 'w', encoding='utf-8') as fh:
        fh.write(json.dumps(report.maps, sort_keys=True, ensure_ascii=False) + "\n")
    summary = {
        'n': report.n,
        'k': report.k,
        'links': report.links,
        'graphs': report.to_frame().to_dict(orient='records'),
        'pass': report.passed,
    }
    with open(os.path.join(outdir, 'summary.json'), 'w', encoding='utf-8') as fh:
        fh.write(json.dumps(summary, sort_keys=True, ensure_ascii=False) + "\n")
    logger.info("wrote chain for n=%d to %s", report.n, outdir)


def cmd_iso_chain(args) -> int:
    report = isomorphism_chain(args.n)
    if args.outdir:
        _write_chain(report, args.outdir, args.emit)
    elif args.emit == 'dot':
        for G in report.graphs.values():
            sys.stdout.write(to_dot(G))
        return EXIT_OK if report.passed else EXIT_FAILED

    if args.json or (args.emit == 'json' and not args.outdir):
        _emit_json({
            'n': report.n,
            'k': report.k,
            'links': report.links,
            'graphs': {name: graph_to_dict(G) for name, G in report.graphs.items()},
            'pass': report.passed,
        })
    else:
        _emit_frame(report.to_frame())
        print()
        _emit_frame(report.links_frame())
    return EXIT_OK if report.passed else EXIT_FAILED


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------
def cmd_verify_all(args) -> int:
    results = Verifier(max_n=args.max_n).run()
    frame = Verifier.to_frame(results)
    if args.json:
        _emit_json(frame.to_dict(orient='records'))
    else:
        _emit_frame(frame)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='reduced-words',
        description='Reduced words, move graphs, recording tableaux and simplex lattices.',
    )
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for INFO, -vv for DEBUG logging on stderr')
    groups = parser.add_subparsers(dest='group', required=True)

    def add_json(p):
        p.add_argument('--json', action='store_true', help='emit one JSON document')

    # perm
    perm = groups.add_parser('perm', help='permutation statistics').add_subparsers(dest='action', required=True)
    p = perm.add_parser('info', help='length, descents, cycle type, Lehmer code')
    p.add_argument('permutation', help='one-line notation, e.g. 5,1,3,4,2 or 51342')
    add_json(p)
    p.set_defaults(func=cmd_perm_info)

    # words
    words = groups.add_parser('words', help='reduced words').add_subparsers(dest='action', required=True)
    p = words.add_parser('enumerate', help='list R(w)')
    p.add_argument('permutation')
    p.add_argument('--count-only', action='store_true', help='print |R(w)| only')
    p.add_argument('--max-words', type=int, default=None, help='word cap for the enumeration')
    add_json(p)
    p.set_defaults(func=cmd_words_enumerate)

    p = words.add_parser('graph', help='move graph of R(w)')
    p.add_argument('permutation')
    p.add_argument('--format', choices=['dot', 'json'], default='dot')
    p.add_argument('--max-words', type=int, default=None)
    p.set_defaults(func=cmd_words_graph)

    # family
    family = groups.add_parser('family', help='the family _nw').add_subparsers(dest='action', required=True)
    p = family.add_parser('verify', help='closed forms vs brute force for one n')
    p.add_argument('n', type=int)
    p.add_argument('--max-n', type=int, default=FAMILY_MAX_N, help='exhaustive enumeration bound')
    add_json(p)
    p.set_defaults(func=cmd_family_verify)

    p = family.add_parser('series', help='generating series audit')
    p.add_argument('--max-n', type=int, default=SERIES_MAX_N)
    add_json(p)
    p.set_defaults(func=cmd_family_series)

    # tableaux
    tableaux = groups.add_parser('tableaux', help='hook tableaux').add_subparsers(dest='action', required=True)
    p = tableaux.add_parser('list', help='row-strict tableaux of shape (n-2,1,1)')
    p.add_argument('n', type=int)
    p.add_argument('--recording-only', action='store_true')
    add_json(p)
    p.set_defaults(func=cmd_tableaux_list)

    # simplex
    simplex = groups.add_parser('simplex', help='dilated simplex').add_subparsers(dest='action', required=True)
    p = simplex.add_parser('points', help='lattice points with weights')
    p.add_argument('k', type=int)
    add_json(p)
    p.set_defaults(func=cmd_simplex_points)

    p = simplex.add_parser('gaussian', help='rank polynomial [k+2 2]_q')
    p.add_argument('k', type=int)
    add_json(p)
    p.set_defaults(func=cmd_simplex_gaussian)

    p = simplex.add_parser('graph', help='lattice cover graph')
    p.add_argument('k', type=int)
    p.add_argument('--format', choices=['dot', 'json'], default='dot')
    p.set_defaults(func=cmd_simplex_graph)

    # iso
    iso = groups.add_parser('iso', help='isomorphism chain').add_subparsers(dest='action', required=True)
    p = iso.add_parser('chain', help='five graphs and four explicit maps')
    p.add_argument('n', type=int)
    p.add_argument('--emit', choices=['dot', 'json'], default=None)
    p.add_argument('--outdir', default=None, help='write graphs, maps.json and summary.json here')
    add_json(p)
    p.set_defaults(func=cmd_iso_chain)

    # verify
    verify = groups.add_parser('verify', help='acceptance suite').add_subparsers(dest='action', required=True)
    p = verify.add_parser('all', help='run every check')
    p.add_argument('--max-n', type=int, default=VERIFY_MAX_N)
    add_json(p)
    p.set_defaults(func=cmd_verify_all)

    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv, jalankan subcommand, kembalikan exit status.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse: 2 untuk usage error, 0 untuk --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    configure_logging(args.verbose)
    if args.group == 'iso' and args.outdir and args.emit is None:
        args.emit = 'dot'

    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"verification alarm: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except CombinatoricsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
