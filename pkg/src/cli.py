"""
Command-line front end: one subcommand per library area, JSON on standard output
"""
import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import ConsistencyError, PayloadError
from .geomaudit import (
    flag_tower_consistency, ga_quotient_shape, hflag_dimension, hgr_dimension,
    normal_rank_identity, strata_frame
)
from .localization import BasisMap, sigma_map, tau_map, verify_exactness
from .pontcalc import (
    GrassAmbient, PolyAmbient, SympClass, cartan_sum, from_roots, make_class, nilpotency_index,
    poly_divides, pontryagin_polynomial, total_class
)
from .rings import flagring
from .rings.grassring import GrassSpec, multiply, rank, relations, unit
from .stability import stabilization_table
from .symcore.polynomials import generator, poly_ring
from .utils.check_counter import summarize_report
from .utils.export_utils import create_report_dataframe, dataframe_records, write_export
from .utils.json_codec import (
    canonical_dumps, decode_sympoly, decode_vector, encode_partition, encode_sympoly,
    encode_t_poly, encode_vector
)
from .utils.parallel_processor import (
    DEFAULT_MAX_WORKERS, log_progress, verify_cells, verify_cells_parallel
)
from .utils.payload_loader import load_payload, require_list, require_object
from .verify.invariants import DEFAULT_SAMPLES

logger = logging.getLogger(__name__)

DEFAULT_SEED = 0
DEFAULT_VERIFY_MAX_R = 3
DEFAULT_VERIFY_MAX_N = 6

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_USAGE = 2


def _configure_logging(verbose: bool) -> None:
    package_logger = logging.getLogger('src')
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.INFO if verbose else logging.WARNING)


def _emit(document: Any) -> None:
    print(canonical_dumps(document))


def _encode_basis_map(basis_map: BasisMap) -> Dict[str, Any]:
    return {
        'source': {'r': basis_map.source.r, 'n': basis_map.source.n},
        'target': {'r': basis_map.target.r, 'n': basis_map.target.n},
        'rows': [encode_partition(lam) for lam in basis_map.rows],
        'cols': [encode_partition(lam) for lam in basis_map.cols],
        'matrix': [[str(int(basis_map.matrix[i, j])) for j in range(basis_map.matrix.cols)]
                   for i in range(basis_map.matrix.rows)],
    }


def cmd_ring(args) -> Tuple[Dict, int]:
    spec = GrassSpec(args.r, args.n)
    document = {
        'r': spec.r,
        'n': spec.n,
        'generators': [encode_sympoly(generator('e', spec.r, i)) for i in range(1, spec.r + 1)],
        'relations': [encode_sympoly(h) for h in relations(spec)],
        'basis': [encode_partition(lam) for lam in spec.basis()],
        'rank': rank(spec),
    }
    return document, EXIT_OK


def cmd_mul(args) -> Tuple[Dict, int]:
    spec = GrassSpec(args.r, args.n)
    factors = [decode_vector(item) for item in require_list(load_payload(args.json), 'mul payload')]

    product = unit(spec)
    for factor in factors:
        product = multiply(spec, product, factor)
    return {'r': spec.r, 'n': spec.n, 'product': encode_vector(product)}, EXIT_OK


def cmd_flag(args) -> Tuple[Dict, int]:
    spec = flagring.FlagSpec(args.r, args.n)
    document = {
        'r': spec.r,
        'n': spec.n,
        'rank': flagring.rank(spec),
        'generators': [encode_sympoly(generator('y', spec.r, i)) for i in range(1, spec.r + 1)],
        'ideal_triangular': [encode_sympoly(g) for g in flagring.ideal_triangular(spec)],
        'ideal_full': [encode_sympoly(g) for g in flagring.ideal_full(spec)],
        'basis_Br': [list(b) for b in flagring.basis_Br(spec.r)],
    }
    code = EXIT_OK
    if args.check_ideals:
        powers, high_degree = flagring.ideal_inclusions(spec)
        equal = flagring.ideals_equal(spec)
        document['ideals_equal'] = equal
        document['powers_in_ideal'] = powers
        document['generators_in_power_of_maximal_ideal'] = high_degree
        if not (equal and powers and high_degree):
            code = EXIT_INVARIANT
    if args.basis:
        basis_ok = flagring.module_basis_check(spec)
        document['module_basis_check'] = basis_ok
        if not basis_ok:
            code = EXIT_INVARIANT
    return document, code


def _ambient_and_decoder(payload: Dict, elements: List[Any]):
    """GrassAmbient when the payload names a ring, otherwise the polynomial ring of the elements"""
    if 'ring' in payload:
        ring_spec = require_object(payload['ring'], 'ring')
        try:
            spec = GrassSpec(int(ring_spec['r']), int(ring_spec['n']))
        except (KeyError, TypeError) as e:
            raise PayloadError(f"ring must have integer 'r' and 'n': {str(e)}")
        return GrassAmbient(spec), decode_vector, encode_vector

    decoded = [decode_sympoly(item) for item in elements]
    ring = decoded[0].ring if decoded else poly_ring('e', 0)
    return PolyAmbient(ring), decode_sympoly, encode_sympoly


def _encode_class(b: SympClass, encode) -> Dict[str, Any]:
    return {
        'half_rank': b.half_rank,
        'classes': [encode(c) for c in b.classes],
        'total_class': encode_t_poly(total_class(b), encode),
        'pontryagin_polynomial': encode_t_poly(pontryagin_polynomial(b), encode),
    }


def cmd_pont(args) -> Tuple[Dict, int]:
    if args.action == 'nilpotency':
        spec = GrassSpec(args.r, args.n)
        v = decode_vector(load_payload(args.json))
        return {'r': spec.r, 'n': spec.n, 'index': nilpotency_index(spec, v)}, EXIT_OK

    payload = require_object(load_payload(args.json), 'pont payload')

    if args.action == 'sum':
        bundles = require_list(payload.get('bundles'), 'bundles')
        raw_classes = [require_list(require_object(b, 'bundle').get('classes', []), 'classes')
                       for b in bundles]
        ambient, decode, encode = _ambient_and_decoder(payload, [c for cs in raw_classes for c in cs])
        classes = [make_class(ambient, [decode(c) for c in cs]) for cs in raw_classes]
        summed = SympClass(ambient, 0, ())
        for b in classes:
            summed = cartan_sum(summed, b)
        return _encode_class(summed, encode), EXIT_OK

    if args.action == 'roots':
        raw_roots = require_list(payload.get('roots'), 'roots')
        ambient, decode, encode = _ambient_and_decoder(payload, raw_roots)
        return _encode_class(from_roots(ambient, [decode(u) for u in raw_roots]), encode), EXIT_OK

    # divide
    dividend = require_list(payload.get('dividend'), 'dividend')
    divisor = require_list(payload.get('divisor'), 'divisor')
    ambient, decode, encode = _ambient_and_decoder(payload, dividend + divisor)
    divides, quotient = poly_divides(ambient, [ambient.check(decode(c)) for c in dividend],
                                     [ambient.check(decode(c)) for c in divisor])
    document = {
        'divides': divides,
        'quotient': encode_t_poly(quotient, encode) if divides else None,
    }
    return document, EXIT_OK


def cmd_localize(args) -> Tuple[Dict, int]:
    report = verify_exactness(args.r, args.n)
    document = {
        'tau': _encode_basis_map(tau_map(args.r, args.n)),
        'sigma': _encode_basis_map(sigma_map(args.r, args.n)),
        'exactness': report,
    }
    return document, EXIT_OK if report['passed'] else EXIT_INVARIANT


def cmd_stability(args) -> Tuple[Dict, int]:
    table = stabilization_table(args.r, args.max_n, args.cap)
    rows = []
    for record in table.to_dict(orient='records'):
        rows.append({
            'monomial': record['monomial'],
            'exponents': [int(a) for a in record['exponents']],
            'weight': int(record['weight']),
            'witness': int(record['witness']),
            'bound': int(record['bound']),
            'within_bound': bool(record['within_bound']),
            'normal_form': encode_vector(dict(record['normal_form'])),
        })
    document = {'r': args.r, 'max_n': args.max_n, 'cap': args.cap, 'table': rows}
    passed = all(row['within_bound'] for row in rows)
    return document, EXIT_OK if passed else EXIT_INVARIANT


def cmd_geom(args) -> Tuple[Dict, int]:
    if args.action == 'strata':
        return {'n': args.n, 'strata': dataframe_records(strata_frame(args.n))}, EXIT_OK

    if args.action == 'dim':
        document = {
            'r': args.r,
            'n': args.n,
            'hgr_dimension': hgr_dimension(args.r, args.n),
            'hflag_dimension': hflag_dimension([1] * args.r, args.n),
        }
        code = EXIT_OK
        if args.r >= 1:
            document['tower_consistent'] = flag_tower_consistency(args.r, args.n)
            code = EXIT_OK if document['tower_consistent'] else EXIT_INVARIANT
        return document, code

    if args.action == 'ga':
        total, group, quotient = ga_quotient_shape(args.n, args.i)
        return {'n': args.n, 'i': args.i, 'total_space_dim': total,
                'group_dim': group, 'quotient_dim': quotient}, EXIT_OK

    # normal
    holds = normal_rank_identity(args.r)
    document = {'r': args.r, 'rank_plus': 2 * args.r, 'rank_minus': 2 * args.r, 'holds': holds}
    return document, EXIT_OK if holds else EXIT_INVARIANT


def cmd_verify(args) -> Tuple[Dict, int]:
    cells = verify_cells(args.max_r, args.max_n)
    logger.info("Verifying %d cells with %d workers", len(cells), args.workers)
    results, errors = verify_cells_parallel(cells, seed=args.seed, samples=args.samples,
                                            max_workers=args.workers, progress_callback=log_progress)
    for error in errors:
        logger.warning("Cell error %s", error)

    df = create_report_dataframe(results)
    if args.export:
        write_export(df, args.export)

    summary = summarize_report(results)
    document = {
        'max_r': args.max_r,
        'max_n': args.max_n,
        'seed': args.seed,
        'samples': args.samples,
        'summary': summary,
        'cells': dataframe_records(df),
    }
    return document, EXIT_OK if summary['Overall_Status'] == 'Pass' else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='hgr',
        description='Exact cohomology rings of quaternionic Grassmannians and flag varieties.',
    )
    parser.add_argument('-v', '--verbose', action='store_true', help='log progress at INFO level')
    subparsers = parser.add_subparsers(dest='command', required=True)

    ring = subparsers.add_parser('ring', help='generators, relations and Schur basis of HGr(r, n)')
    ring.add_argument('--r', type=int, required=True)
    ring.add_argument('--n', type=int, required=True)
    ring.set_defaults(handler=cmd_ring)

    mul = subparsers.add_parser('mul', help='product of SchurVectors read from the payload')
    mul.add_argument('--r', type=int, required=True)
    mul.add_argument('--n', type=int, required=True)
    mul.add_argument('--json', default='-', help="payload path, '-' for standard input")
    mul.set_defaults(handler=cmd_mul)

    flag = subparsers.add_parser('flag', help='presentation and module basis of HFlag(1^r; n)')
    flag.add_argument('--r', type=int, required=True)
    flag.add_argument('--n', type=int, required=True)
    flag.add_argument('--check-ideals', action='store_true')
    flag.add_argument('--basis', action='store_true')
    flag.set_defaults(handler=cmd_flag)

    pont = subparsers.add_parser('pont', help='Pontryagin class calculus')
    pont.add_argument('action', choices=['sum', 'roots', 'divide', 'nilpotency'])
    pont.add_argument('--r', type=int)
    pont.add_argument('--n', type=int)
    pont.add_argument('--json', default='-', help="payload path, '-' for standard input")
    pont.set_defaults(handler=cmd_pont)

    localize = subparsers.add_parser('localize', help='localization sequence matrices and exactness')
    localize.add_argument('--r', type=int, required=True)
    localize.add_argument('--n', type=int, required=True)
    localize.set_defaults(handler=cmd_localize)

    stability = subparsers.add_parser('stability', help='stabilization table of p-monomials')
    stability.add_argument('--r', type=int, required=True)
    stability.add_argument('--max-n', type=int, required=True)
    stability.add_argument('--cap', type=int, required=True)
    stability.set_defaults(handler=cmd_stability)

    geom = subparsers.add_parser('geom', help='dimension and stratification bookkeeping')
    geom.add_argument('action', choices=['strata', 'dim', 'ga', 'normal'])
    geom.add_argument('--r', type=int)
    geom.add_argument('--n', type=int)
    geom.add_argument('--i', type=int)
    geom.set_defaults(handler=cmd_geom)

    verify = subparsers.add_parser('verify', help='run the invariant suite over a grid of (r, n)')
    verify.add_argument('--max-n', type=int, default=DEFAULT_VERIFY_MAX_N)
    verify.add_argument('--max-r', type=int, default=DEFAULT_VERIFY_MAX_R)
    verify.add_argument('--seed', type=int, default=DEFAULT_SEED)
    verify.add_argument('--samples', type=int, default=DEFAULT_SAMPLES)
    verify.add_argument('--workers', type=int, default=DEFAULT_MAX_WORKERS)
    verify.add_argument('--export', help='write the report to a .csv or .xlsx file')
    verify.set_defaults(handler=cmd_verify)

    return parser


# Flags each positional action needs
REQUIRED_FLAGS = {
    ('pont', 'nilpotency'): ('r', 'n'),
    ('geom', 'strata'): ('n',),
    ('geom', 'dim'): ('r', 'n'),
    ('geom', 'ga'): ('n', 'i'),
    ('geom', 'normal'): ('r',),
}


def _check_required(parser: argparse.ArgumentParser, args) -> None:
    needed = REQUIRED_FLAGS.get((args.command, getattr(args, 'action', None)), ())
    missing = [f"--{name}" for name in needed if getattr(args, name) is None]
    if missing:
        parser.error(f"{args.command} {args.action} requires {', '.join(missing)}")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, run one subcommand and print its JSON document

    Returns:
        0 on success, 1 when an invariant check fails, 2 on usage or payload errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_required(parser, args)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    _configure_logging(args.verbose)

    try:
        document, code = args.handler(args)
    except PayloadError as e:
        print(f"error: {str(e)}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as e:
        print(f"consistency error: {str(e)}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, OSError) as e:
        print(f"error: {str(e)}", file=sys.stderr)
        return EXIT_USAGE

    _emit(document)
    return code


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
