"""
Command-line entry point for hyperoct.
"""
import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from sympy import isprime

from hyperoct import config
from hyperoct.config import DEBUG
from hyperoct.element_classes import Family, chessboard_class
from hyperoct.errors import (
    InvalidElementError, UsageError
)
from hyperoct.generating_functions import (
    GENFUN_VARIANTS, IDENTITY_VARIANTS, ConjectureVerifier, descent_table,
    fg_genfun, identity_checks, support_check
)
from hyperoct.index_set import IndexSet
from hyperoct.involutions import (
    InvolutionChecker, InvolutionKind, apply_involution, in_domain
)
from hyperoct.permutation_stats import l_value, stat_record
from hyperoct.report_writer import ReportWriter
from hyperoct.signed_permutation import parabolic_decompose, parse_window
from hyperoct.symmetric_rank import sym_rank_check, sym_rank_distribution

# Set up logging
logging.basicConfig(
    level=logging.DEBUG if DEBUG else logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger('hyperoct')

# Exit codes
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2  # set by argparse
EXIT_ERROR = 3

SUPPORT_FAMILIES = ("chessboard", "diagonal", "M", "E")


@dataclass
class Record:
    """A plain report row."""

    data: Dict[str, Any]

    def to_dict(self):
        return dict(self.data)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=config.OUTPUT_FORMATS, default=None,
                        help='Report format (default from resources/run_defaults.json)')
    common.add_argument('--jobs', type=int, default=None,
                        help=f'Worker processes for enumeration (or ${config.JOBS_ENV_VAR})')
    common.add_argument('--debug', action='store_true', help='Enable debug logging')

    parser = argparse.ArgumentParser(
        prog=config.APP_NAME,
        description='Exhaustive checks of signed generating functions on the hyperoctahedral group')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('stats', parents=[common], help='All statistics of one element')
    p.add_argument('window', help='Window such as "[1,-4,-3,2]"')

    p = sub.add_parser('verify', parents=[common], help='Compare class sums with f_{n,I}')
    p.add_argument('--n', type=_positive, required=True)
    p.add_argument('--subset', required=True, help='"0,2,4", "" or "all"')

    p = sub.add_parser('support', parents=[common], help='Check a supporting family')
    p.add_argument('--n', type=_positive, required=True)
    p.add_argument('--subset', required=True)
    p.add_argument('--family', choices=SUPPORT_FAMILIES, required=True)

    p = sub.add_parser('involution', parents=[common], help='Apply or check an involution')
    p.add_argument('--kind', choices=[k.value for k in InvolutionKind], required=True)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument('--window', help='Apply the involution to one element')
    target.add_argument('--n', type=_positive, help='Degree for --check')
    p.add_argument('--check', action='store_true', help='Run the property suite over B_n')

    p = sub.add_parser('identity', parents=[common], help='Check an auxiliary identity')
    p.add_argument('--n', type=_positive, required=True)
    p.add_argument('--subset', required=True)
    p.add_argument('--variant', choices=IDENTITY_VARIANTS, default='stanley')

    p = sub.add_parser('symrank', parents=[common], help='Count symmetric matrices over F_q by rank')
    p.add_argument('--n', type=_positive, required=True)
    p.add_argument('--q', type=_positive, required=True)
    p.add_argument('--i', required=True, help='Corank, or "all"')
    p.add_argument('--budget', type=_positive, default=None,
                   help=f'Maximum number of matrices (default {config.DEFAULT_SYMRANK_BUDGET})')

    p = sub.add_parser('decompose', parents=[common], help='Parabolic factorisation w = w^I w_I')
    p.add_argument('window')
    p.add_argument('--subset', required=True)

    p = sub.add_parser('genfun', parents=[common], help='Print a generating function')
    p.add_argument('--n', type=_positive, required=True)
    p.add_argument('--subset', required=True)
    p.add_argument('--variant', choices=GENFUN_VARIANTS, default='L')
    return parser


def _subsets(n: int, text: str) -> List[IndexSet]:
    if text.strip() == 'all':
        return list(IndexSet.all_subsets(n))
    return [IndexSet.parse(n, text)]


def _identity_admissible(n: int, subset: IndexSet, variant: str) -> bool:
    return variant == 'stanley' or (n % 2 == 0 and subset.is_even())


def _support_admissible(n: int, subset: IndexSet, family: Family) -> bool:
    if family is Family.CHESSBOARD:
        return True
    if family is Family.DIAGONAL:
        return subset == IndexSet.full(n)
    if 0 not in subset:
        return False
    return family is Family.M or n % 2 == 1 or subset.is_even()


def _validate(args) -> Dict[str, Any]:
    """
    Parse and check every parameter before any computation starts.

    Raises:
        UsageError: for any invalid combination of parameters
    """
    params: Dict[str, Any] = {
        'format': args.format or config.get_run_defaults().get('format', 'text'),
        'jobs': config.resolve_jobs(args.jobs),
    }
    try:
        if args.command in ('stats', 'decompose'):
            params['window'] = parse_window(args.window)
        if args.command == 'decompose':
            params['subset'] = IndexSet.parse(params['window'].n, args.subset)
        if args.command in ('verify', 'support', 'identity', 'genfun'):
            params['subsets'] = _subsets(args.n, args.subset)
    except InvalidElementError as e:
        raise UsageError(str(e))

    if args.command == 'support':
        family = Family(args.family)
        params['family'] = family
        admissible = [s for s in params['subsets'] if _support_admissible(args.n, s, family)]
        if not admissible:
            raise UsageError(f"no admissible index set for the {family.value} support at n={args.n}")
        params['subsets'] = admissible
    if args.command == 'identity':
        admissible = [s for s in params['subsets'] if _identity_admissible(args.n, s, args.variant)]
        if not admissible:
            raise UsageError(f"{args.variant} needs even n and even I")
        params['subsets'] = admissible
    if args.command == 'involution':
        params['kind'] = InvolutionKind(args.kind)
        if args.window is not None:
            if args.check:
                raise UsageError("--check runs over B_n; pass --n instead of --window")
            try:
                params['window'] = parse_window(args.window)
            except InvalidElementError as e:
                raise UsageError(str(e))
            if not in_domain(params['kind'], params['window']):
                raise UsageError(f"{args.kind} is not defined at {params['window']}")
        elif not args.check:
            raise UsageError("--n needs --check")
    if args.command == 'symrank':
        if args.i.strip() == 'all':
            params['coranks'] = list(range(args.n + 1))
        else:
            try:
                corank = int(args.i)
            except ValueError:
                raise UsageError(f"--i must be an integer or 'all', got {args.i!r}")
            if not 0 <= corank <= args.n:
                raise UsageError(f"--i must lie in [0, {args.n}], got {corank}")
            params['coranks'] = [corank]
        if not isprime(args.q):
            raise UsageError(f"--q must be a prime, got {args.q}")
        budget = args.budget or config.get_run_defaults().get(
            'symrank_budget', config.DEFAULT_SYMRANK_BUDGET)
        if args.q ** (args.n * (args.n + 1) // 2) > budget:
            raise UsageError(f"q^(n(n+1)/2) exceeds the budget of {budget} matrices")
        params['budget'] = budget
    return params


def _run_stats(args, params) -> List[Any]:
    w = params['window']
    data = {'window': str(w), 'chessboard': chessboard_class(w).value}
    data.update(stat_record(w).to_dict())
    return [Record(data)]


def _run_decompose(args, params) -> List[Any]:
    w, subset = params['window'], params['subset']
    factorization = parabolic_decompose(w, subset)
    return [Record({
        'window': str(w),
        'I': subset.to_list(),
        'quotient': str(factorization.quotient),
        'subgroup_part': str(factorization.subgroup_part),
        'L': l_value(w),
        'L_quotient': l_value(factorization.quotient),
        'L_subgroup_part': l_value(factorization.subgroup_part),
    })]


def _run_involution(args, params) -> List[Any]:
    if 'window' in params:
        return [apply_involution(params['kind'], params['window'])]
    return [InvolutionChecker(params['kind'], args.n).run()]


def _run_symrank(args, params) -> List[Any]:
    distribution = sym_rank_distribution(args.n, args.q, params['budget'])
    return [sym_rank_check(args.n, args.q, i, distribution=distribution)
            for i in params['coranks']]


def _run_genfun(args, params) -> List[Any]:
    return [Record({
        'n': args.n,
        'I': subset.to_list(),
        'variant': args.variant,
        'polynomial': fg_genfun(args.n, subset, args.variant).to_list(),
    }) for subset in params['subsets']]


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one subcommand and write its reports.

    Returns:
        int: EXIT_PASS if every verdict passes, EXIT_FAIL otherwise; usage
            errors exit with EXIT_USAGE
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    # Configure logging based on args
    if args.debug:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        params = _validate(args)
    except UsageError as e:
        parser.error(str(e))

    command = args.command
    if command == 'stats':
        reports = _run_stats(args, params)
    elif command == 'decompose':
        reports = _run_decompose(args, params)
    elif command == 'verify':
        verifier = ConjectureVerifier(args.n, params['jobs'])
        reports = [verifier.verify(s) for s in params['subsets']]
    elif command == 'support':
        table = descent_table(args.n, params['jobs'])
        reports = [support_check(args.n, s, params['family'], table) for s in params['subsets']]
    elif command == 'identity':
        table = descent_table(args.n, params['jobs']) if args.variant.startswith('even-') else None
        reports = []
        for subset in params['subsets']:
            reports.extend(identity_checks(args.n, subset, args.variant, table))
    elif command == 'involution':
        reports = _run_involution(args, params)
    elif command == 'symrank':
        reports = _run_symrank(args, params)
    else:
        reports = _run_genfun(args, params)

    ReportWriter(params['format']).write(reports)
    failures = sum(1 for r in reports if getattr(r, 'passed', True) is False)
    if failures:
        logger.warning(f"{failures} of {len(reports)} checks failed")
        return EXIT_FAIL
    return EXIT_PASS


def main():
    """Main entry point for the application."""
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        sys.exit(0)
    except Exception as e:
        logger.error(f"Error running hyperoct: {e}", exc_info=True)
        sys.exit(EXIT_ERROR)


if __name__ == '__main__':
    main()
