"""Command line interface.

JSON results go to stdout and diagnostics to stderr. Exit status is 0 on
success, 1 when a check is false or a reproduction row fails, 2 on usage
or input errors and 3 when a search limit stopped an exact solve.
"""
import argparse
import json
import logging
import sys

import jsonschema

from .bounds import bound_report
from .errors import MutualVisibilityError, VerificationError
from .graph import (VertexSet, build_complete, build_cycle,
                    build_hoffman_singleton, build_moore_graph,
                    build_petersen, read_edge_list)
from .lpformat import build_ip_model, export_lp
from .solver import (SearchLimits, SolveResult, count_induced_k_matchings,
                     max_induced_matching, mu_exact)
from .suite import GROUPS, run_suite
from .visibility import (analyze_set, count_mv_sets_of_size, induced_type,
                         select_checker, visibility_breakdown,
                         visibility_polynomial)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


class GraphSpec:
    """A graph selector: ``petersen``, ``hoffman-singleton``, ``cycle:<n>``,
    ``complete:<n>``, ``moore:<d>`` or ``file:<path>``."""

    NAMED = {
        'petersen': build_petersen,
        'hoffman-singleton': build_hoffman_singleton,
    }
    SIZED = {
        'cycle': build_cycle,
        'complete': build_complete,
        'moore': build_moore_graph,
    }

    def __init__(self, text):
        family, _, argument = text.partition(':')
        if family in self.NAMED and not argument:
            pass
        elif family in self.SIZED and argument.isdigit():
            argument = int(argument)
        elif family == 'file' and argument:
            pass
        else:
            raise argparse.ArgumentTypeError(
                'unknown graph {!r}'.format(text)
            )
        self.text = text
        self.family = family
        self.argument = argument

    def build(self):
        if self.family in self.NAMED:
            return self.NAMED[self.family]()
        if self.family in self.SIZED:
            return self.SIZED[self.family](self.argument)
        return read_edge_list(self.argument)

    def __str__(self):
        return self.text


def _emit(data):
    print(json.dumps(data, indent=2))


def _limits(args):
    return SearchLimits(time_ms=args.limit_ms, nodes=args.limit_nodes)


def _solved(result, args):
    _emit(result.replace(graph=str(args.graph)).serialize())
    return EXIT_OK if result.proven else EXIT_LIMIT


def cmd_profile(args):
    _emit(args.graph.build().profile().serialize())
    return EXIT_OK


def cmd_check(args):
    g = args.graph.build()
    if args.certificate is not None:
        with open(args.certificate, encoding='utf-8') as handle:
            vertices = SolveResult.deserialize(json.load(handle)).certificate
    else:
        vertices = VertexSet.parse(args.set)
    vertices.require_within(g.n)
    checker, check = select_checker(g)
    visible = check(vertices.mask)
    _emit({
        'graph': str(args.graph),
        'set': vertices.serialize(),
        'is_mv': visible,
        'checker': checker,
        'analysis': analyze_set(g, vertices).serialize(),
    })
    return EXIT_OK if visible else EXIT_FALSE


def cmd_polynomial(args):
    g = args.graph.build()
    if args.count is not None:
        count = count_mv_sets_of_size(g, args.count, args.force, args.threads)
        _emit({'graph': str(args.graph), 'k': args.count, 'count': count})
        return EXIT_OK
    polynomial = visibility_polynomial(g, args.force, args.threads)
    data = {
        'graph': str(args.graph),
        'coefficients': polynomial.coefficients.serialize(),
        'polynomial': str(polynomial),
        'mu': polynomial.mv_number,
    }
    if args.by_type:
        data['by_type'] = {
            str(size): {induced_type(*kind): count
                        for kind, count in sorted(kinds.items())}
            for size, kinds in visibility_breakdown(g, args.force).items()
        }
    _emit(data)
    return EXIT_OK


def cmd_mu(args):
    g = args.graph.build()
    method = 'exhaustive' if args.exhaustive else 'branch-and-bound'
    result = mu_exact(g, method, args.canonical, _limits(args), args.force)
    return _solved(result, args)


def cmd_induced_matching(args):
    g = args.graph.build()
    if args.count is not None:
        _emit({'graph': str(args.graph), 'k': args.count,
               'count': count_induced_k_matchings(g, args.count)})
        return EXIT_OK
    return _solved(max_induced_matching(g, args.canonical, _limits(args)),
                   args)


def cmd_bounds(args):
    data = {'graph': str(args.graph)}
    data.update(bound_report(args.graph.build()).serialize())
    _emit(data)
    return EXIT_OK


def cmd_export_lp(args):
    model = build_ip_model(args.graph.build())
    if args.out is None:
        export_lp(model, sys.stdout)
    else:
        with open(args.out, 'w', encoding='utf-8') as handle:
            export_lp(model, handle)
        logger.info('wrote %s', args.out)
    return EXIT_OK


def cmd_verify_paper(args):
    rows = run_suite(args.only)
    widths = [max([len(header)] + [len(str(getattr(row, field)))
                                   for row in rows])
              for header, field in (('group', 'group'), ('check', 'name'),
                                    ('expected', 'expected'),
                                    ('got', 'got'))]
    line = '{:<%d}  {:<%d}  {:<%d}  {:<%d}  {:>7}  {}' % tuple(widths)
    print(line.format('group', 'check', 'expected', 'got', 'ms', 'status'))
    for row in rows:
        print(line.format(row.group, row.name, row.expected, row.got, row.ms,
                          'ok' if row.passed else 'FAIL'))
    failed = sum(1 for row in rows if not row.passed)
    print('{} checks, {} failed'.format(len(rows), failed))
    return EXIT_FALSE if failed else EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog='mutualvis',
        description='Exact mutual-visibility computations on small graphs.'
    )
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress to stderr (repeat for debug)')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument('--graph', type=GraphSpec, required=True,
                       help='petersen, hoffman-singleton, cycle:<n>, '
                            'complete:<n>, moore:<d> or file:<path>')

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument('--canonical', action='store_true',
                        help='return the lexicographically smallest optimum')
    search.add_argument('--limit-ms', type=int, default=None)
    search.add_argument('--limit-nodes', type=int, default=None)

    command = commands.add_parser('profile', parents=[graph],
                                  help='structural invariants')
    command.set_defaults(handler=cmd_profile)

    command = commands.add_parser('check', parents=[graph],
                                  help='test one vertex set')
    source = command.add_mutually_exclusive_group(required=True)
    source.add_argument('--set', help='comma-separated vertices')
    source.add_argument('--certificate', metavar='JSON',
                        help='use the certificate of a saved result')
    command.set_defaults(handler=cmd_check)

    command = commands.add_parser('polynomial', parents=[graph],
                                  help='visibility polynomial')
    command.add_argument('--force', action='store_true',
                         help='enumerate graphs above the size limit')
    command.add_argument('--count', type=int, metavar='K',
                         help='only count sets of size K')
    command.add_argument('--threads', type=int, default=1)
    command.add_argument('--by-type', action='store_true',
                         help='split counts by induced graph type')
    command.set_defaults(handler=cmd_polynomial)

    command = commands.add_parser('mu', parents=[graph, search],
                                  help='mutual-visibility number')
    command.add_argument('--exhaustive', action='store_true',
                         help='solve by enumeration')
    command.add_argument('--force', action='store_true')
    command.set_defaults(handler=cmd_mu)

    command = commands.add_parser('induced-matching', parents=[graph, search],
                                  help='maximum or counted induced matchings')
    command.add_argument('--count', type=int, metavar='K')
    command.set_defaults(handler=cmd_induced_matching)

    command = commands.add_parser('bounds', parents=[graph],
                                  help='closed-form upper bounds')
    command.set_defaults(handler=cmd_bounds)

    command = commands.add_parser('export-lp', parents=[graph],
                                  help='write the integer program')
    command.add_argument('--out', metavar='PATH')
    command.set_defaults(handler=cmd_export_lp)

    command = commands.add_parser('verify-paper',
                                  help='run the reproduction checks')
    command.add_argument('--only', choices=GROUPS)
    command.set_defaults(handler=cmd_verify_paper)
    return parser


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr,
        format='%(asctime)s %(name)s %(levelname)s %(message)s'
    )


def main(argv=None):
    args = _build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.handler(args)
    except OSError as exc:
        print('mutualvis: cannot open {}: {}'.format(
            exc.filename, exc.strerror), file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print('mutualvis: {}'.format(exc), file=sys.stderr)
        return EXIT_FALSE
    except (MutualVisibilityError, jsonschema.ValidationError,
            json.JSONDecodeError) as exc:
        print('mutualvis: {}'.format(exc), file=sys.stderr)
        return EXIT_USAGE
