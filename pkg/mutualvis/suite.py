"""Reproduction checks for the Petersen and Hoffman-Singleton results.

Each check is a function returning a value that is compared with the
expected one; ``run_suite`` turns every check into a ``SuiteRow``.
"""
import io
import logging
import random
import time
from math import comb

from . import bounds
from .errors import ArgumentError
from .graph import (build_hoffman_singleton, build_petersen,
                    random_connected_graph, VertexSet, iter_bits, popcount)
from .lpformat import build_ip_model, export_lp, parse_lp
from .records import Field, Record
from .solver import (count_independent_k_sets, count_induced_k_matchings,
                     max_induced_matching, mu_exact, solve_ip_model,
                     verify_certificate)
from .visibility import (analyze_set, count_mv_sets_of_size, is_mv_set,
                         is_mv_set_diam2, is_mv_set_dissociation,
                         is_mv_set_general, iter_mv_sets, select_checker,
                         visibility_polynomial)

logger = logging.getLogger(__name__)

GROUPS = ('petersen', 'hoffman-singleton', 'properties')
SEED = 20240607

_CHECKS = []


def check(group, name, expected):
    def register(func):
        _CHECKS.append((group, name, expected, func))
        return func
    return register


class SuiteRow(Record):
    group = Field(str)
    name = Field(str)
    expected = Field(str)
    got = Field(str)
    passed = Field(bool)
    ms = Field(int)


def run_suite(only=None):
    if only is not None and only not in GROUPS:
        raise ArgumentError('unknown group {!r}; choose from {}'.format(
            only, ', '.join(GROUPS)
        ))
    rows = []
    for group, name, expected, func in _CHECKS:
        if only is not None and group != only:
            continue
        started = time.perf_counter()
        try:
            got = func()
            passed = got == expected
            text = repr(got)
        except Exception as exc:
            logger.warning('check %r raised %r', name, exc)
            passed = False
            text = '{}: {}'.format(type(exc).__name__, exc)
        rows.append(SuiteRow(
            group=group, name=name, expected=repr(expected), got=text,
            passed=passed, ms=int((time.perf_counter() - started) * 1000),
        ))
        logger.info('%s / %s: %s', group, name, 'ok' if passed else 'FAIL')
    return rows


def _is_perfect_matching(g, vertices):
    analysis = analyze_set(g, vertices)
    return analysis.isolated_count == 0 and analysis.induced_max_degree == 1


@check('petersen', 'strongly regular parameters', (10, 3, 0, 1))
def _petersen_srg():
    return tuple(build_petersen().profile().srg)


@check('petersen', 'visibility polynomial',
       (1, 10, 45, 90, 80, 30, 5, 0, 0, 0, 0))
def _petersen_polynomial():
    return tuple(visibility_polynomial(build_petersen()).coefficients)


@check('petersen', 'maximum sets', (6, 5, True))
def _petersen_maximum():
    g = build_petersen()
    largest = [s for s in iter_mv_sets(g) if len(s) == 6]
    return (mu_exact(g).optimum, count_mv_sets_of_size(g, 6),
            all(_is_perfect_matching(g, s) for s in largest))


@check('petersen', 'induced matchings and independent sets', (15, 5, 0, 5))
def _petersen_matchings():
    g = build_petersen()
    return (count_induced_k_matchings(g, 2), count_induced_k_matchings(g, 3),
            count_induced_k_matchings(g, 4), count_independent_k_sets(g, 4))


@check('petersen', 'edge neighbourhood complements are 2K2', 15)
def _petersen_edge_complements():
    g = build_petersen()
    found = 0
    for u, v in g.edges():
        rest = VertexSet(g.full_mask & ~(g.adj[u] | g.adj[v]))
        if len(rest) == 4 and _is_perfect_matching(g, rest):
            found += 1
    return found


@check('petersen', 'bounds', (6, 6, 6, 6))
def _petersen_bounds():
    report = bounds.bound_report(build_petersen())
    return (report.diameter_two, report.unique_neighbour,
            report.degree_count, report.jensen)


@check('hoffman-singleton', 'strongly regular parameters', (50, 7, 0, 1))
def _hs_srg():
    return tuple(build_hoffman_singleton().profile().srg)


@check('hoffman-singleton', 'mutual-visibility number', (20, True, 10, 4))
def _hs_mu():
    g = build_hoffman_singleton()
    result = mu_exact(g)
    analysis = verify_certificate(g, result.certificate, result.optimum)
    return (result.optimum, result.proven, analysis.e_S, analysis.uniform_k)


@check('hoffman-singleton', 'maximum induced matching', (10, True))
def _hs_matching():
    result = max_induced_matching(build_hoffman_singleton())
    return (result.optimum, result.proven)


@check('hoffman-singleton', 'bounds', (31, 43, 26, 20))
def _hs_bounds():
    report = bounds.bound_report(build_hoffman_singleton())
    return (report.diameter_two, report.unique_neighbour,
            report.degree_count, report.jensen)


@check('hoffman-singleton', 'LP export round trip', (50, True, 20))
def _hs_lp():
    g = build_hoffman_singleton()
    sink = io.StringIO()
    export_lp(build_ip_model(g), sink)
    rows = [line for line in sink.getvalue().splitlines()
            if line.startswith('c')]
    model = parse_lp(sink.getvalue())
    return (len(rows), all(line.endswith('<= 8') for line in rows),
            solve_ip_model(model).optimum)


def _random_graphs(count, low, high, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(low, high)
        yield random_connected_graph(n, rng.uniform(0.1, 0.6),
                                     seed=rng.getrandbits(32))


@check('properties', 'subsets of mutually visible sets', 1000)
def _hereditary():
    rng = random.Random(SEED)
    held = 0
    for g in _random_graphs(1000, 4, 10, SEED + 1):
        members = [v for v in range(g.n) if rng.random() < 0.5]
        while not is_mv_set(g, members):
            members.remove(rng.choice(members))
        subset = [v for v in members if rng.random() < 0.5]
        held += is_mv_set(g, subset)
    return held


@check('properties', 'checkers agree on Petersen subsets', 1024)
def _checker_agreement():
    g = build_petersen()
    agree = 0
    for mask in range(1 << g.n):
        verdicts = {is_mv_set_general(g, VertexSet(mask)),
                    is_mv_set_diam2(g, VertexSet(mask)),
                    is_mv_set_dissociation(g, VertexSet(mask))}
        agree += len(verdicts) == 1
    return agree


@check('properties', 'pair-count identity on Petersen', 261)
def _pair_identity():
    g = build_petersen()
    held = 0
    for vertices in iter_mv_sets(g):
        analysis = analyze_set(g, vertices)
        held += analysis.nonadjacent_pairs == analysis.covered_pairs
    return held


@check('properties', 'cut-edge identity on Hoffman-Singleton', 1000)
def _cut_identity():
    g = build_hoffman_singleton()
    rng = random.Random(SEED)
    held = 0
    for _ in range(1000):
        vertices = VertexSet(rng.getrandbits(g.n))
        analysis = analyze_set(g, vertices)
        held += analysis.e_S_T == 7 * analysis.s - 2 * analysis.e_S
    return held


@check('properties', 'low-order coefficients', 50)
def _low_order():
    held = 0
    for g in _random_graphs(50, 3, 12, SEED + 2):
        coefficients = visibility_polynomial(g).coefficients
        held += coefficients[:3] == [1, g.n, comb(g.n, 2)]
    return held


@check('properties', 'search agrees with enumeration', 50)
def _search_agreement():
    held = 0
    for g in _random_graphs(50, 3, 12, SEED + 3):
        result = mu_exact(g)
        _, is_visible = select_checker(g)
        held += (result.optimum == visibility_polynomial(g).mv_number and
                 is_visible(result.certificate.mask))
    return held


@check('properties', 'visible sets induce matchings', 261)
def _dissociation_shape():
    g = build_petersen()
    held = 0
    for vertices in iter_mv_sets(g):
        mask = vertices.mask
        degree = max((popcount(g.adj[v] & mask) for v in iter_bits(mask)),
                     default=0)
        analysis = analyze_set(g, vertices)
        held += (degree <= 1 and analysis.induced_max_degree == degree and
                 2 * analysis.e_S <= analysis.s and
                 2 * len(analysis.matching_edges) + analysis.isolated_count
                 == analysis.s)
    return held
