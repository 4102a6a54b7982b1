"""Mutual-visibility checks, set statistics and exhaustive enumeration.

A vertex set S of a connected graph is mutually visible when every pair of
its vertices is joined by a shortest path whose interior avoids S.
"""
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from math import comb

from .errors import ArgumentError, EnumerationRefused, PreconditionError
from .graph import VertexSet, iter_bits, popcount
from .records import Array, Field, Record, Table

logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 30

DISSOCIATION = 'dissociation'
DIAMETER_TWO = 'diameter-2'
GENERAL = 'general'


def _mask_in(g, vertices):
    if not isinstance(vertices, VertexSet):
        vertices = VertexSet.from_vertices(vertices)
    return vertices.require_within(g.n).mask


def _general_ok(g, mask):
    if popcount(mask) <= 2:
        return True
    adj = g.adj
    for u in iter_bits(mask):
        dist = g.distances(u)
        pending = mask & ~(1 << u)
        seen = frontier = 1 << u
        level = 0
        # members of S are reached but never expanded
        while frontier and pending:
            level += 1
            reach = 0
            for w in iter_bits(frontier):
                reach |= adj[w]
            reach &= ~seen
            seen |= reach
            arrived = reach & pending
            for v in iter_bits(arrived):
                if dist[v] != level:
                    return False
            pending &= ~arrived
            frontier = reach & ~mask
        if pending:
            return False
    return True


def _diameter_two_ok(g, mask):
    adj = g.adj
    outside = ~mask
    for u in iter_bits(mask):
        later = mask & ~adj[u] & ~((2 << u) - 1)
        for v in iter_bits(later):
            if not adj[u] & adj[v] & outside:
                return False
    return True


def _dissociation_ok(g, mask):
    adj = g.adj
    return all(popcount(adj[v] & mask) <= 1 for v in iter_bits(mask))


def _require_connected(g):
    if not g.is_connected():
        raise PreconditionError('mutual visibility needs a connected graph')


def is_mv_set_general(g, vertices):
    mask = _mask_in(g, vertices)
    _require_connected(g)
    return _general_ok(g, mask)


def is_mv_set_diam2(g, vertices):
    mask = _mask_in(g, vertices)
    profile = g.profile()
    if not profile.connected or profile.diameter > 2:
        raise PreconditionError('graph does not have diameter at most 2')
    return _diameter_two_ok(g, mask)


def is_mv_set_dissociation(g, vertices):
    """In a triangle-free graph where non-adjacent pairs have exactly one
    common neighbour, S is mutually visible iff G[S] has maximum degree at
    most 1."""
    mask = _mask_in(g, vertices)
    if not g.profile().dissociation_class:
        raise PreconditionError(
            'graph is not triangle-free with unique common neighbours'
        )
    return _dissociation_ok(g, mask)


def select_checker(g):
    """Return ``(name, check)`` for the cheapest valid checker of g.

    ``check`` takes a vertex bitmask and skips precondition checks.
    """
    profile = g.profile()
    if profile.dissociation_class:
        return DISSOCIATION, lambda mask: _dissociation_ok(g, mask)
    if profile.connected and profile.diameter <= 2:
        return DIAMETER_TWO, lambda mask: _diameter_two_ok(g, mask)
    _require_connected(g)
    return GENERAL, lambda mask: _general_ok(g, mask)


def is_mv_set(g, vertices):
    mask = _mask_in(g, vertices)
    return select_checker(g)[1](mask)


class SetAnalysis(Record):
    """Counting statistics of a vertex set S and its complement T.

    ``k_histogram`` maps the number of S-neighbours of a vertex of T to the
    number of such vertices.
    """
    s = Field(int)
    e_S = Field(int)
    e_S_T = Field(int)
    k_histogram = Field(Table[int])
    induced_max_degree = Field(int)
    matching_edges = Field(Array[Array[int]])
    isolated_count = Field(int)
    component_sizes = Field(Array[int])
    nonadjacent_pairs = Field(int)
    covered_pairs = Field(int)

    def histogram(self):
        return {int(k): count for k, count in self.k_histogram.items()}

    @property
    def uniform_k(self):
        """The common S-neighbour count of T, or None if it varies."""
        present = [k for k, count in self.histogram().items() if count]
        return present[0] if len(present) == 1 else None


def _components(adj, mask):
    remaining = mask
    while remaining:
        component = frontier = remaining & -remaining
        while frontier:
            reach = 0
            for w in iter_bits(frontier):
                reach |= adj[w]
            frontier = reach & mask & ~component
            component |= frontier
        remaining &= ~component
        yield component


def analyze_set(g, vertices):
    mask = _mask_in(g, vertices)
    adj = g.adj
    inner = [popcount(adj[v] & mask) for v in iter_bits(mask)]
    outward = sum(popcount(adj[v] & ~mask) for v in iter_bits(mask))
    histogram = Counter(
        popcount(adj[t] & mask) for t in iter_bits(g.full_mask & ~mask)
    )
    components = list(_components(adj, mask))
    matching = [list(iter_bits(c)) for c in components if popcount(c) == 2]
    s = popcount(mask)
    e_S = sum(inner) // 2
    return SetAnalysis(
        s=s,
        e_S=e_S,
        e_S_T=outward,
        k_histogram={str(k): histogram[k] for k in sorted(histogram)},
        induced_max_degree=max(inner, default=0),
        matching_edges=matching,
        isolated_count=sum(1 for c in components if popcount(c) == 1),
        component_sizes=sorted((popcount(c) for c in components),
                               reverse=True),
        nonadjacent_pairs=comb(s, 2) - e_S,
        covered_pairs=sum(comb(k, 2) * c for k, c in histogram.items()),
    )


class VisibilityPolynomial(Record):
    """Coefficient i counts the mutually visible sets of size i."""
    n = Field(int)
    coefficients = Field(Array[int])

    def coefficient(self, i):
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    @property
    def mv_number(self):
        return max(i for i, count in enumerate(self.coefficients) if count)

    def __str__(self):
        terms = []
        for i, count in enumerate(self.coefficients):
            if not count:
                continue
            if i == 0:
                terms.append(str(count))
                continue
            power = 'x' if i == 1 else 'x^{}'.format(i)
            terms.append(power if count == 1 else '{}{}'.format(count, power))
        return ' + '.join(terms)


def _guard(g, force):
    _require_connected(g)
    if g.n > ENUMERATION_LIMIT and not force:
        raise EnumerationRefused(
            'enumerating {} vertices exceeds the limit of {}; '
            'pass force=True (--force) to proceed'
            .format(g.n, ENUMERATION_LIMIT)
        )


def _branch_sets(g, check, top, depth):
    """Yield the mutually visible sets of at most depth vertices whose
    smallest vertex is top."""
    stack = [(1 << top, top, 1)]
    while stack:
        mask, last, size = stack.pop()
        yield mask
        if size == depth:
            continue
        for w in range(g.n - 1, last, -1):
            grown = mask | 1 << w
            if check(grown):
                stack.append((grown, w, size + 1))


def _branch_tally(g, top, depth):
    _, check = select_checker(g)
    tallies = [0] * (g.n + 1)
    for mask in _branch_sets(g, check, top, depth):
        tallies[popcount(mask)] += 1
    return tallies


def _enumerate(g, depth, force, workers):
    _guard(g, force)
    tallies = [0] * (g.n + 1)
    tallies[0] = 1
    if depth == 0:
        return tallies
    tops = list(range(g.n))
    if workers > 1:
        logger.info('enumerating %r with %d worker processes', g, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(
                _branch_tally, [g] * len(tops), tops, [depth] * len(tops)
            ))
    else:
        parts = [_branch_tally(g, top, depth) for top in tops]
    for part in parts:
        for i, count in enumerate(part):
            tallies[i] += count
    logger.debug('tallies for %r: %s', g, tallies)
    return tallies


def iter_mv_sets(g, force=False):
    """Yield every mutually visible set of g, the empty set first."""
    _guard(g, force)
    _, check = select_checker(g)
    yield VertexSet()
    for top in range(g.n):
        for mask in _branch_sets(g, check, top, g.n):
            yield VertexSet(mask)


def visibility_polynomial(g, force=False, workers=1):
    if workers < 1:
        raise ArgumentError('workers must be positive')
    return VisibilityPolynomial(
        n=g.n, coefficients=_enumerate(g, g.n, force, workers)
    )


def count_mv_sets_of_size(g, k, force=False, workers=1):
    if k < 0:
        raise ArgumentError('set size must be non-negative, got {}'.format(k))
    if workers < 1:
        raise ArgumentError('workers must be positive')
    if k > g.n:
        _guard(g, force)
        return 0
    return _enumerate(g, k, force, workers)[k]


def induced_type(edges, isolated):
    """Name the induced graph jK2 + iK1, for example ``2K2+K1``."""
    parts = []
    for count, name in ((edges, 'K2'), (isolated, 'K1')):
        if count:
            parts.append(name if count == 1 else '{}{}'.format(count, name))
    return '+'.join(parts) or 'K0'


def visibility_breakdown(g, force=False):
    """Count mutually visible sets by size and induced type.

    Returns ``{size: {(edges, isolated): count}}`` for graphs whose
    mutually visible sets are the dissociation sets.
    """
    if not g.profile().dissociation_class:
        raise PreconditionError(
            'breakdown by type needs a triangle-free graph with unique '
            'common neighbours'
        )
    adj = g.adj
    breakdown = {}
    for vertices in iter_mv_sets(g, force):
        mask = vertices.mask
        edges = sum(popcount(adj[v] & mask) for v in iter_bits(mask)) // 2
        kind = (edges, len(vertices) - 2 * edges)
        by_kind = breakdown.setdefault(len(vertices), Counter())
        by_kind[kind] += 1
    return {size: dict(by_kind) for size, by_kind in sorted(breakdown.items())}
