"""Exact maximization of mutual-visibility, dissociation and induced
matching sets, plus subset counters.

The dissociation search keeps two disjoint bitmasks: ``inc`` (chosen) and
``cand`` (undecided); every other vertex is excluded. On regular graphs
whose mutually visible sets are the dissociation sets, each node is also
tested against the counting identity of ``mutualvis.bounds``: the excluded
vertices T carry S-neighbour counts k_t that must sum to d*s - 2*e while
the sum of C(k_t, 2) stays within C(s, 2) - e.
"""
import logging
import time

from . import bounds
from .errors import ArgumentError, PreconditionError, VerificationError
from .graph import VertexSet, iter_bits, popcount
from .lpformat import IpModel
from .records import Array, Choice, Field, Record
from .visibility import analyze_set, iter_mv_sets, select_checker

logger = logging.getLogger(__name__)


class SolveMethod(Choice):
    branch_and_bound = 'branch-and-bound'
    exhaustive = 'exhaustive'


class SearchLimits(Record):
    time_ms = Field(int, optional=True)
    nodes = Field(int, optional=True)


class SolveResult(Record):
    """Outcome of an exact search.

    ``proven`` is False when a limit stopped the search; ``optimum`` and
    ``certificate`` then hold the best set found so far. ``canonical`` is
    set when a lexicographically smallest certificate was asked for, and is
    False when a limit cut that pass short.
    """
    problem = Field(str)
    graph = Field(str, optional=True)
    optimum = Field(int)
    certificate = Field(VertexSet)
    edges = Field(Array[Array[int]], optional=True)
    nodes = Field(int)
    ms = Field(int)
    proven = Field(bool)
    method = Field(SolveMethod)
    canonical = Field(bool, optional=True)


class _LimitReached(Exception):
    pass


class _Settled(Exception):
    pass


def _key(mask):
    return tuple(iter_bits(mask))


def _checked_limits(limits):
    if limits.nodes is not None and limits.nodes < 1:
        raise ArgumentError('node limit must be at least 1, got {}'.format(
            limits.nodes))
    if limits.time_ms is not None and limits.time_ms < 0:
        raise ArgumentError('time limit must be non-negative, got {}'.format(
            limits.time_ms))
    return limits


class _Search:

    def __init__(self, g, canonical, limits):
        self.g = g
        self.adj = g.adj
        self.n = g.n
        self.full = g.full_mask
        self.want_canonical = canonical
        self.canonical = False
        self.canonical_complete = None
        self.limits = _checked_limits(limits or SearchLimits())
        self.nodes = 0
        self.started = time.perf_counter()
        self.best = 0
        self.best_mask = 0
        self.floor = -1
        self.ceiling = None

    @property
    def elapsed_ms(self):
        return int((time.perf_counter() - self.started) * 1000)

    def _tick(self):
        self.nodes += 1
        limits = self.limits
        if limits.nodes is not None and self.nodes > limits.nodes:
            raise _LimitReached()
        if limits.time_ms is not None and self.nodes & 1023 == 1 and \
                self.elapsed_ms > limits.time_ms:
            raise _LimitReached()

    def _offer(self, value, mask):
        if value > self.best or (
                self.canonical and value == self.best and
                _key(mask) < _key(self.best_mask)):
            self.best, self.best_mask = value, mask
            logger.debug('incumbent %d after %d nodes', value, self.nodes)
            if not self.canonical and self.ceiling is not None and \
                    value >= self.ceiling:
                raise _Settled()

    def _target(self):
        return max(self.best, self.floor) + (0 if self.canonical else 1)

    def _branch_vertex(self, cand):
        adj = self.adj
        chosen, degree = -1, -1
        for v in iter_bits(cand):
            residual = popcount(adj[v] & cand)
            if residual > degree:
                chosen, degree = v, residual
        return chosen

    def _canonical_pass(self):
        self.canonical = True
        self.ceiling = None
        self.floor = self.best - 1
        try:
            self._search(0, self.full)
        except _LimitReached:
            self.canonical_complete = False
            logger.warning('canonical pass interrupted; certificate may not '
                           'be the lexicographically smallest')
        else:
            self.canonical_complete = True

    def run(self):
        """Search to optimality or a limit; return True when proven."""
        try:
            self._run()
        except _Settled:
            pass
        except _LimitReached:
            logger.warning('search stopped by limit after %d nodes',
                           self.nodes)
            return False
        if self.want_canonical:
            self._canonical_pass()
        return True


class _DissociationSearch(_Search):
    """Branch and bound over sets inducing maximum degree at most 1.

    With ``matching`` the objective is the number of induced edges and the
    certificate drops vertices left isolated.
    """

    def __init__(self, g, matching=False, canonical=False, limits=None):
        super().__init__(g, canonical, limits)
        self.matching = matching
        profile = g.profile()
        self.degree = None
        if profile.dissociation_class and profile.is_regular:
            self.degree = profile.degree

    def _propagate(self, inc, cand):
        adj = self.adj
        once = twice = blocked = isolated = 0
        for v in iter_bits(inc):
            row = adj[v]
            twice |= once & row
            once |= row
            if row & inc:
                blocked |= row
            else:
                isolated |= 1 << v
        return cand & ~(twice | blocked), isolated

    def _value(self, inc, isolated):
        if self.matching:
            return (popcount(inc) - popcount(isolated)) // 2
        return popcount(inc)

    def _certificate(self, inc, isolated):
        return inc & ~isolated if self.matching else inc

    def _upper(self, inc, cand, isolated):
        adj = self.adj
        extra = popcount(cand)
        used = 0
        for v in iter_bits(isolated):
            group = adj[v] & cand
            if not group:
                if self.matching:
                    return -1
                continue
            # an isolated chosen vertex accepts at most one neighbour
            group &= ~used
            if group:
                extra -= popcount(group) - 1
                used |= group
        size = popcount(inc)
        if self.matching:
            alone = popcount(isolated)
            return (size - alone) // 2 + (alone + extra) // 2
        return size + extra

    def _targets(self, target, upper):
        """(s, e_min, e_max) triples a completion must hit."""
        if self.matching:
            return [(2 * k, k, k) for k in range(target, upper + 1)]
        return [(target, 0, target // 2)]

    def _counting_allows(self, targets, inc, cand, isolated):
        d, n, adj = self.degree, self.n, self.adj
        size = popcount(inc)
        e_low = (size - popcount(isolated)) // 2
        alive = sum(1 for v in iter_bits(isolated) if adj[v] & cand)
        excluded = self.full & ~inc & ~cand
        count = popcount(excluded)
        reach = inc | cand
        # diff[l] accumulates how many excluded vertices can rise from l
        diff = [0] * (d + 2)
        base = low = 0
        for t in iter_bits(excluded):
            row = adj[t]
            a = popcount(row & inc)
            b = popcount(row & reach)
            base += a * (a - 1) // 2
            low += a
            diff[a] += 1
            diff[b] -= 1
        for s, e_min, e_max in targets:
            if s < size or n - s < count:
                continue
            free = n - s - count
            fresh = s - size
            paired = min(alive, fresh)
            e_high = e_low + paired + (fresh - paired) // 2
            for e in range(max(e_min, e_low), min(e_max, e_high) + 1):
                need = d * s - 2 * e - low
                if need < 0:
                    continue
                cost = base
                running = 0
                for level in range(d):
                    running += diff[level]
                    take = min(need, free + running)
                    cost += take * level
                    need -= take
                    if not need:
                        break
                if not need and 2 * cost <= s * (s - 1) - 2 * e:
                    return True
        return False

    def _search(self, inc, cand):
        self._tick()
        cand, isolated = self._propagate(inc, cand)
        self._offer(self._value(inc, isolated),
                    self._certificate(inc, isolated))
        target = self._target()
        upper = self._upper(inc, cand, isolated)
        if upper < target or not cand:
            return
        if self.degree is not None and not self._counting_allows(
                self._targets(target, upper), inc, cand, isolated):
            return
        low = 1 << self._branch_vertex(cand)
        self._search(inc | low, cand & ~low)
        self._search(inc, cand & ~low)

    def _greedy(self):
        adj = self.adj
        if self.matching:
            chosen = blocked = 0
            for u, v in self.g.edges():
                if (blocked >> u | blocked >> v) & 1:
                    continue
                chosen |= 1 << u | 1 << v
                blocked |= adj[u] | adj[v] | 1 << u | 1 << v
            self._offer(popcount(chosen) // 2, chosen)
            return
        inc, cand = 0, self.full
        while True:
            cand, isolated = self._propagate(inc, cand)
            if not cand:
                break
            v = min(iter_bits(cand),
                    key=lambda u: (popcount(adj[u] & cand), u))
            inc |= 1 << v
            cand &= ~(1 << v)
        self._offer(popcount(inc), inc)

    def _cap(self):
        top = self.n // 2 if self.matching else self.n
        if self.degree is None:
            return top
        for value in range(top, -1, -1):
            targets = self._targets(value, value)
            if self._counting_allows(targets, 0, self.full, 0):
                return value
        return 0

    def _run(self):
        self._greedy()
        cap = self._cap()
        logger.info('%s on %r: greedy %d, cap %d',
                    'induced matching' if self.matching else 'dissociation',
                    self.g, self.best, cap)
        self.ceiling = cap
        if self.best >= cap:
            return
        if self.degree is None:
            self._search(0, self.full)
            return
        # the first ceiling that admits a set is the optimum
        for ceiling in range(cap, self.best, -1):
            if self.best >= ceiling:
                return
            self.ceiling = ceiling
            self.floor = ceiling - 1
            self._search(0, self.full)
            logger.info('no set of value %d after %d nodes', ceiling,
                        self.nodes)


class _VisibilitySearch(_Search):
    """Branch and bound over mutually visible sets of any connected graph,
    using that subsets of mutually visible sets stay mutually visible."""

    def __init__(self, g, canonical=False, limits=None):
        super().__init__(g, canonical, limits)
        self.checker, self.check = select_checker(g)

    def _search(self, chosen, cand):
        self._tick()
        self._offer(popcount(chosen), chosen)
        if popcount(chosen) + popcount(cand) < self._target() or not cand:
            return
        low = 1 << self._branch_vertex(cand)
        grown = chosen | low
        keep = 0
        for w in iter_bits(cand & ~low):
            if self.check(grown | 1 << w):
                keep |= 1 << w
        self._search(grown, keep)
        self._search(chosen, cand & ~low)

    def _run(self):
        self.ceiling = self.n
        logger.info('mutual visibility on %r with the %s checker',
                    self.g, self.checker)
        self._search(0, self.full)


def _induced_edges(g, mask):
    return [[u, v] for u, v in g.edges() if mask >> u & 1 and mask >> v & 1]


def _result(search, problem, proven, matching=False):
    return SolveResult(
        problem=problem,
        optimum=search.best,
        certificate=VertexSet(search.best_mask),
        edges=_induced_edges(search.g, search.best_mask) if matching else None,
        nodes=search.nodes,
        ms=search.elapsed_ms,
        proven=proven,
        method=SolveMethod.branch_and_bound,
        canonical=search.canonical_complete,
    )


def max_dissociation(g, canonical=False, limits=None):
    search = _DissociationSearch(g, canonical=canonical, limits=limits)
    proven = search.run()
    return _result(search, 'max-dissociation', proven)


def max_induced_matching(g, canonical=False, limits=None):
    search = _DissociationSearch(g, matching=True, canonical=canonical,
                                 limits=limits)
    proven = search.run()
    return _result(search, 'max-induced-matching', proven, matching=True)


def _exhaustive_mu(g, force):
    started = time.perf_counter()
    best = VertexSet()
    seen = 0
    for vertices in iter_mv_sets(g, force):
        seen += 1
        if len(vertices) > len(best) or (
                len(vertices) == len(best) and
                _key(vertices.mask) < _key(best.mask)):
            best = vertices
    return SolveResult(
        problem='mu',
        optimum=len(best),
        certificate=best,
        nodes=seen,
        ms=int((time.perf_counter() - started) * 1000),
        proven=True,
        method=SolveMethod.exhaustive,
        canonical=True,
    )


def mu_exact(g, method='branch-and-bound', canonical=False, limits=None,
             force=False):
    """Size of a largest mutually visible set of a connected graph."""
    try:
        method = SolveMethod(method)
    except ValueError as exc:
        raise ArgumentError(str(exc)) from None
    if not g.is_connected():
        raise PreconditionError('mutual visibility needs a connected graph')
    if method == SolveMethod.exhaustive:
        return _exhaustive_mu(g, force)
    if g.profile().dissociation_class:
        search = _DissociationSearch(g, canonical=canonical, limits=limits)
    else:
        search = _VisibilitySearch(g, canonical=canonical, limits=limits)
    proven = search.run()
    return _result(search, 'mu', proven)


def solve_ip_model(model: IpModel, canonical=False, limits=None):
    result = max_dissociation(model.to_graph(), canonical, limits)
    return result.replace(problem='ip-mv')


def iter_independent_sets(g, k):
    """Yield the independent sets of exactly k vertices."""
    if k < 0:
        raise ArgumentError('set size must be non-negative, got {}'.format(k))
    adj = g.adj

    def grow(chosen, cand, need):
        if not need:
            yield VertexSet(chosen)
            return
        while popcount(cand) >= need:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            yield from grow(chosen | low, cand & ~adj[v], need - 1)

    return grow(0, g.full_mask, k)


def iter_induced_matchings(g, k):
    """Yield the induced matchings of exactly k edges as edge lists."""
    if k < 1:
        raise ArgumentError('matching size must be positive, got {}'.format(k))
    adj = g.adj
    edges = g.edges()

    def grow(start, blocked, chosen):
        if len(chosen) == k:
            yield list(chosen)
            return
        for i in range(start, len(edges) - (k - len(chosen)) + 1):
            u, v = edges[i]
            if (blocked >> u | blocked >> v) & 1:
                continue
            chosen.append((u, v))
            yield from grow(i + 1, blocked | adj[u] | adj[v] | 1 << u | 1 << v,
                            chosen)
            chosen.pop()

    return grow(0, 0, [])


def count_independent_k_sets(g, k):
    return sum(1 for _ in iter_independent_sets(g, k))


def count_induced_k_matchings(g, k):
    return sum(1 for _ in iter_induced_matchings(g, k))


def verify_certificate(g, vertices, expected):
    """Check that vertices is a mutually visible set of the expected size.

    When the counting identity pins down the number of induced edges for
    this size, also check that edge count and that every outside vertex
    sees the same number of S-vertices.
    """
    if not isinstance(vertices, VertexSet):
        vertices = VertexSet.from_vertices(vertices)
    if vertices.mask >> g.n:
        raise VerificationError('range', 'certificate names a vertex >= {}'
                                .format(g.n))
    if len(vertices) != expected:
        raise VerificationError('size', 'certificate has {} vertices, '
                                'expected {}'.format(len(vertices), expected))
    checker, check = select_checker(g)
    if not check(vertices.mask):
        raise VerificationError('mutual-visibility',
                                'set fails the {} check'.format(checker))
    analysis = analyze_set(g, vertices)
    profile = g.profile()
    if profile.dissociation_class and profile.is_regular:
        forced = bounds.forced_structure(g.n, profile.degree, len(vertices))
        if forced is not None:
            e, k = forced
            if analysis.e_S != e:
                raise VerificationError(
                    'induced-edges',
                    'S induces {} edges, expected {}'.format(analysis.e_S, e)
                )
            if analysis.uniform_k != k:
                raise VerificationError(
                    'uniform-k',
                    'outside vertices see {} S-vertices, expected all {}'
                    .format(analysis.histogram(), k)
                )
    return analysis
