"""
Command-line entry point.

    python app.py coeff --gamma 0 --m-from 1 --m-to 10
    python app.py green --z1 i --z2 0 --z3 i --m 1 --v 1 --radius 20
    python app.py verify --only degree --tol 1e-6

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain error, 4 singular point.
"""

import argparse
import csv
import io
import json
import logging
import os
import sys
from fractions import Fraction

from arith import split_discriminant
from config import Config
from eisenstein import coefficient_C, cohen_H
from errors import DomainError, KudlaToolkitError, SingularPointError
from green_integrals import heegner_degree
from lattice import green_function
from pdf_generator import generate_pdf_report
from siegel import SiegelPoint
from verify import SUITE_ALIASES, SUITES, run_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_SINGULAR = 4

FORMATS = ('text', 'json', 'csv', 'pdf')


class UsageError(Exception):
    pass


def fmt(value):
    if isinstance(value, float):
        return f"{value:.15g}"
    if value is None:
        return ''
    return str(value)


def number(value):
    """A float rounded to the 15 significant digits the text and CSV outputs print."""
    return float(f"{value:.15g}")


def parse_complex(text):
    try:
        return complex(text.strip().replace(' ', '').replace('i', 'j'))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r} (use re+imi)")


def parse_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default=argparse.SUPPRESS, help='output format (default text)')
    common.add_argument('--output', default=argparse.SUPPRESS, help='write the report to this path')
    common.add_argument('--verbose', action='store_true', default=argparse.SUPPRESS, help='debug logging')

    parser = argparse.ArgumentParser(
        prog='kgt',
        description='Eisenstein coefficients, Green functions and identity checks for the (3,2) lattice.',
        parents=[common],
    )
    commands = parser.add_subparsers(dest='command', required=True)

    coeff = commands.add_parser('coeff', parents=[common], help='table of H(2,4m), C(γ,m,0) and degrees')
    coeff.add_argument('--gamma', type=int, choices=(0, 1), default=0)
    coeff.add_argument('--m-from', type=parse_rational, required=True)
    coeff.add_argument('--m-to', type=parse_rational, required=True)
    coeff.add_argument('--four-m', action='store_true', help='read --m-from/--m-to as 4m')

    green = commands.add_parser('green', parents=[common], help='truncated Green function at a point of H_2')
    green.add_argument('--z1', type=parse_complex, required=True)
    green.add_argument('--z2', type=parse_complex, required=True)
    green.add_argument('--z3', type=parse_complex, required=True)
    green.add_argument('--m', type=parse_rational, required=True)
    green.add_argument('--gamma', type=int, choices=(0, 1), default=0)
    green.add_argument('--v', type=positive_float, required=True)
    green.add_argument('--radius', type=positive_float, default=20.0)
    green.add_argument('--tol', type=positive_float, default=None)

    verify = commands.add_parser('verify', parents=[common], help='run the identity checks')
    verify.add_argument('--only', action='append', choices=sorted([*SUITES, *SUITE_ALIASES]), default=[], metavar='NAME')
    verify.add_argument('--tol', type=positive_float, default=None)
    return parser


def index_range(gamma, m_from, m_to, four_m):
    if four_m:
        m_from, m_to = m_from / 4, m_to / 4
    if m_from <= 0:
        raise UsageError(f"m must be positive, got {m_from}")
    offset = Fraction(0) if gamma == 0 else Fraction(1, 4)
    if (m_from - offset).denominator != 1:
        raise UsageError(f"m={m_from} is not in the gamma={gamma} class")
    indices = []
    m = m_from
    while m <= m_to:
        indices.append(m)
        m += 1
    return indices


def cmd_coeff(args, prec):
    rows = []
    for m in index_range(args.gamma, args.m_from, args.m_to, args.four_m):
        c = split_discriminant(args.gamma, m)
        degree = heegner_degree(c, prec)
        rows.append({
            'gamma': c.gamma,
            'm': str(c.m),
            'D0': c.D0,
            'f': c.f,
            'H': str(cohen_H(c).value),
            'C': number(coefficient_C(c, prec)),
            'degree': number(degree.value),
            'degree_exact': None if degree.exact_part is None else str(degree.exact_part),
        })
    inputs = {'gamma': args.gamma, 'm_from': str(args.m_from), 'm_to': str(args.m_to), 'four_m': args.four_m}
    return {'command': 'coeff', 'inputs': inputs, 'rows': rows}, EXIT_OK


def cmd_green(args, prec):
    z = SiegelPoint(args.z1, args.z2, args.z3)
    c = split_discriminant(args.gamma, args.m)
    evaluation = green_function(
        c, args.v, z, args.radius, prec,
        max_points=Config.MAX_LATTICE_POINTS,
        singular_threshold=Config.SINGULAR_THRESHOLD,
    )
    inputs = {
        'z1': str(args.z1), 'z2': str(args.z2), 'z3': str(args.z3),
        'gamma': c.gamma, 'm': str(c.m), 'v': args.v, 'radius': args.radius,
    }
    result = {
        'value': number(evaluation.value),
        'half_sum': number(evaluation.half_sum),
        'terms_used': evaluation.terms_used,
        'tail_bound': number(evaluation.tail_bound),
        'radius': evaluation.radius,
        'nearest': None if evaluation.terms_used == 0 else number(evaluation.nearest),
    }
    return {'command': 'green', 'inputs': inputs, 'result': result}, EXIT_OK


def cmd_verify(args, prec):
    tol = args.tol if args.tol is not None else Config.VERIFY_TOL
    reports, passed = run_suites(args.only, prec, tol)
    checks = []
    for report in reports:
        check = report.to_dict()
        for key in ('lhs', 'rhs', 'abs_diff', 'rel_diff'):
            check[key] = number(check[key])
        check['status'] = 'PASS' if report.passed(tol) else 'FAIL'
        checks.append(check)
    inputs = {'suites': args.only or sorted(SUITES), 'tol': tol}
    return {'command': 'verify', 'inputs': inputs, 'checks': checks}, EXIT_OK if passed else EXIT_VERIFY_FAILED


def _records(payload):
    if 'rows' in payload:
        return payload['rows']
    if 'checks' in payload:
        return [
            {**check, 'inputs': '; '.join(f"{k}={v}" for k, v in check['inputs'].items()),
             'routes': ' | '.join(check['routes'])}
            for check in payload['checks']
        ]
    return [payload['result']]


def _header(payload):
    if payload['command'] == 'coeff':
        return ['gamma', 'm', 'D0', 'f', 'H', 'C', 'degree', 'degree_exact']
    records = _records(payload)
    return list(records[0].keys()) if records else []


def render_text(payload):
    lines = []
    if payload['command'] == 'verify':
        for check in payload['checks']:
            inputs = ', '.join(f"{k}={v}" for k, v in check['inputs'].items())
            lines.append(
                f"{check['status']} {check['name']} [{inputs}] "
                f"lhs={fmt(check['lhs'])} rhs={fmt(check['rhs'])} diff={fmt(check['abs_diff'])}"
            )
        passed = sum(1 for check in payload['checks'] if check['status'] == 'PASS')
        lines.append(f"{passed}/{len(payload['checks'])} checks passed")
    else:
        header = _header(payload)
        lines.append('\t'.join(header))
        for record in _records(payload):
            lines.append('\t'.join(fmt(record.get(key)) for key in header))
    return '\n'.join(lines) + '\n'


def render_csv(payload):
    buffer = io.StringIO()
    header = _header(payload)
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for record in _records(payload):
        writer.writerow([fmt(record.get(key)) for key in header])
    return buffer.getvalue()


def render_json(payload):
    return json.dumps(payload, indent=2) + '\n'


def emit(payload, output_format, output_path):
    if output_format == 'pdf':
        if not output_path:
            raise UsageError("--format pdf needs --output")
        directory = os.path.dirname(output_path)
        if not directory:
            directory = Config.REPORT_DIR
            output_path = os.path.join(directory, output_path)
        os.makedirs(directory, exist_ok=True)
        if not generate_pdf_report(payload, output_path):
            raise UsageError(f"could not write {output_path}")
        return
    text = {'text': render_text, 'json': render_json, 'csv': render_csv}[output_format](payload)
    if output_path:
        with open(output_path, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


COMMANDS = {'coeff': cmd_coeff, 'green': cmd_green, 'verify': cmd_verify}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code

    verbose = getattr(args, 'verbose', False)
    logging.basicConfig(
        level=logging.DEBUG if verbose else Config.LOG_LEVEL,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    output_format = getattr(args, 'format', 'text')
    output_path = getattr(args, 'output', None)
    tol = getattr(args, 'tol', None)
    prec = Config.precision(tol if args.command == 'green' else None)

    try:
        payload, code = COMMANDS[args.command](args, prec)
        emit(payload, output_format, output_path)
        return code
    except SingularPointError as exc:
        logger.error("singular point: %s", exc)
        return EXIT_SINGULAR
    except DomainError as exc:
        logger.error("domain error: %s", exc)
        return EXIT_DOMAIN
    except UsageError as exc:
        logger.error("%s", exc)
        return EXIT_USAGE
    except KudlaToolkitError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
