"""Small simple graphs with bitset adjacency.

Vertices are the integers ``0 .. n-1`` with ``n <= MAX_VERTICES`` so that
any vertex set fits in one machine word; ``g.adj[v]`` is the bitmask of the
neighbourhood of ``v``.

Canonical vertex orders of the named graphs:

* Petersen: the 2-subsets of {1..5} in lexicographic order
  (``PETERSEN_LABELS``), adjacent when disjoint.
* Hoffman-Singleton: pentagons P_0..P_4 followed by pentagrams Q_0..Q_4,
  five vertices each. Vertex j of P_h is ``5*h + j`` and vertex j of Q_i
  is ``25 + 5*i + j``.
"""
import itertools
import logging
import random
import re
from collections import deque

import jsonschema

from .errors import (ArgumentError, ConstructionError, EdgeListError,
                     GraphSizeError)
from .records import Array, Field, Record, Serializable

logger = logging.getLogger(__name__)

MAX_VERTICES = 64

PETERSEN_LABELS = tuple(itertools.combinations(range(1, 6), 2))

popcount = int.bit_count


def iter_bits(mask):
    """Yield the positions of the set bits of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _check_order(n):
    if isinstance(n, bool) or not isinstance(n, int) or \
            not 1 <= n <= MAX_VERTICES:
        raise GraphSizeError('vertex count must be in 1..{}, got {}'.format(
            MAX_VERTICES, n
        ))


class VertexSet(Serializable):
    """An immutable set of vertices stored as a bitmask."""

    def __init__(self, mask=0):
        if isinstance(mask, bool) or not isinstance(mask, int) or mask < 0:
            raise ArgumentError('vertex mask must be a non-negative integer')
        self._mask = mask

    @classmethod
    def from_vertices(cls, vertices):
        vertices = list(vertices)
        for v in vertices:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ArgumentError('invalid vertex {!r}'.format(v))
        if len(set(vertices)) != len(vertices):
            raise ArgumentError('duplicate vertex in {}'.format(vertices))
        return cls(mask_of(vertices))

    @classmethod
    def parse(cls, text):
        """Parse a comma-separated list such as ``"0,2,12"``."""
        text = text.strip()
        if not text:
            return cls()
        try:
            vertices = [int(part) for part in text.split(',')]
        except ValueError:
            raise ArgumentError(
                'invalid vertex list {!r}'.format(text)
            ) from None
        return cls.from_vertices(vertices)

    @property
    def mask(self):
        return self._mask

    def __len__(self):
        return popcount(self._mask)

    def __iter__(self):
        return iter_bits(self._mask)

    def __contains__(self, v):
        return isinstance(v, int) and v >= 0 and bool(self._mask >> v & 1)

    def __eq__(self, other):
        return isinstance(other, VertexSet) and self._mask == other._mask

    def __hash__(self):
        return hash(self._mask)

    def __repr__(self):
        return 'VertexSet({})'.format(list(self))

    def __str__(self):
        return ','.join(str(v) for v in self)

    def require_within(self, n):
        if self._mask >> n:
            raise ArgumentError('vertex {} out of range 0..{}'.format(
                self._mask.bit_length() - 1, n - 1
            ))
        return self

    @classmethod
    def schema(cls):
        return {
            'type': 'array',
            'items': {'type': 'integer', 'minimum': 0},
            'uniqueItems': True
        }

    def serialize(self):
        return list(self)

    @classmethod
    def deserialize(cls, data):
        jsonschema.validate(data, cls.schema())
        return cls.from_vertices(data)


class GraphProfile(Record):
    """Structural invariants of a graph.

    ``diameter`` is omitted for disconnected graphs and ``girth`` for
    acyclic ones. ``srg`` holds ``[n, k, lambda, mu]`` when the graph is
    strongly regular. ``dissociation_class`` marks triangle-free graphs in
    which every non-adjacent pair has exactly one common neighbour; there
    the mutual-visibility sets are exactly the dissociation sets.
    """
    n = Field(int)
    edges = Field(int)
    is_regular = Field(bool)
    degree = Field(int, optional=True)
    max_degree = Field(int)
    min_degree = Field(int)
    connected = Field(bool)
    diameter = Field(int, optional=True)
    acyclic = Field(bool)
    girth = Field(int, optional=True)
    triangle_free = Field(bool)
    srg = Field(Array[int], optional=True)
    unique_common_neighbour = Field(bool)
    dissociation_class = Field(bool)
    is_moore_diam2 = Field(bool)


class Graph:
    """An immutable simple graph on the vertices 0..n-1."""

    def __init__(self, n, adj):
        _check_order(n)
        adj = tuple(adj)
        if len(adj) != n:
            raise ArgumentError('expected {} adjacency rows, got {}'.format(
                n, len(adj)
            ))
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ArgumentError(
                    'row {} names a vertex outside 0..{}'.format(v, n - 1)
                )
            if row >> v & 1:
                raise ArgumentError('vertex {} is adjacent to itself'.format(v))
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ArgumentError(
                        'adjacency of {} and {} is not symmetric'.format(v, u)
                    )
        self._n = n
        self._adj = adj
        self._cache = {}

    @classmethod
    def from_edges(cls, n, edges):
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError('edge ({}, {}) leaves 0..{}'.format(
                    u, v, n - 1
                ))
            if u == v:
                raise ArgumentError('self-loop at {}'.format(u))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def __reduce__(self):
        return (Graph, (self._n, self._adj))

    @property
    def n(self):
        return self._n

    @property
    def adj(self):
        return self._adj

    @property
    def full_mask(self):
        return (1 << self._n) - 1

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return popcount(self._adj[v])

    def degrees(self):
        return tuple(popcount(row) for row in self._adj)

    def has_edge(self, u, v):
        return bool(self._adj[u] >> v & 1)

    def edges(self):
        """All edges (u, v) with u < v in lexicographic order."""
        return [
            (u, v)
            for u, row in enumerate(self._adj)
            for v in iter_bits(row >> (u + 1) << (u + 1))
        ]

    @property
    def edge_count(self):
        return sum(self.degrees()) // 2

    def distances(self, source):
        """BFS distances from source; None marks unreachable vertices."""
        key = ('distances', source)
        if key not in self._cache:
            dist = [None] * self._n
            dist[source] = 0
            seen = frontier = 1 << source
            level = 0
            while frontier:
                level += 1
                reach = 0
                for w in iter_bits(frontier):
                    reach |= self._adj[w]
                frontier = reach & ~seen
                seen |= frontier
                for w in iter_bits(frontier):
                    dist[w] = level
            self._cache[key] = tuple(dist)
        return self._cache[key]

    def is_connected(self):
        return None not in self.distances(0)

    def profile(self):
        if 'profile' not in self._cache:
            self._cache['profile'] = profile(self)
        return self._cache['profile']

    def __eq__(self, other):
        return (isinstance(other, Graph) and self._n == other._n and
                self._adj == other._adj)

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self):
        return 'Graph(n={}, edges={})'.format(self._n, self.edge_count)


def _girth(g):
    best = None
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in iter_bits(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def profile(g):
    n = g.n
    adj = g.adj
    degrees = g.degrees()
    max_degree, min_degree = max(degrees), min(degrees)
    regular = max_degree == min_degree
    connected = g.is_connected()
    diameter = None
    if connected:
        diameter = max(max(g.distances(v)) for v in range(n))
    edges = g.edges()
    lambdas = {popcount(adj[u] & adj[v]) for u, v in edges}
    mus = {
        popcount(adj[u] & adj[v])
        for u, v in itertools.combinations(range(n), 2)
        if not adj[u] >> v & 1
    }
    triangle_free = lambdas <= {0}
    unique_common_neighbour = mus <= {1}
    srg = None
    if regular and len(lambdas) == 1 and len(mus) == 1:
        srg = [n, max_degree, lambdas.pop(), mus.pop()]
    girth = _girth(g)
    return GraphProfile(
        n=n,
        edges=len(edges),
        is_regular=regular,
        degree=max_degree if regular else None,
        max_degree=max_degree,
        min_degree=min_degree,
        connected=connected,
        diameter=diameter,
        acyclic=girth is None,
        girth=girth,
        triangle_free=triangle_free,
        srg=srg,
        unique_common_neighbour=unique_common_neighbour,
        dissociation_class=triangle_free and unique_common_neighbour,
        is_moore_diam2=(regular and diameter == 2 and
                        n == max_degree * max_degree + 1),
    )


def common_neighbors(g, u, v):
    for w in (u, v):
        if not 0 <= w < g.n:
            raise ArgumentError('vertex {} out of range 0..{}'.format(
                w, g.n - 1
            ))
    if u == v:
        raise ArgumentError('common neighbours need two distinct vertices')
    return VertexSet(g.adj[u] & g.adj[v])


def build_cycle(n):
    if isinstance(n, bool) or not isinstance(n, int) or \
            not 3 <= n <= MAX_VERTICES:
        raise GraphSizeError('a cycle needs 3..{} vertices, got {}'.format(
            MAX_VERTICES, n
        ))
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def build_complete(n):
    _check_order(n)
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def _require_srg(g, expected, name):
    found = g.profile().srg
    if found is None or tuple(found) != expected:
        raise ConstructionError(
            '{} construction produced srg {} instead of {}'.format(
                name, found, expected
            )
        )
    return g


def build_petersen():
    edges = [
        (i, j)
        for (i, a), (j, b) in itertools.combinations(
            enumerate(PETERSEN_LABELS), 2
        )
        if not set(a) & set(b)
    ]
    return _require_srg(Graph.from_edges(10, edges), (10, 3, 0, 1), 'Petersen')


def _hoffman_singleton_edges():
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return edges


def build_hoffman_singleton():
    g = Graph.from_edges(50, _hoffman_singleton_edges())
    return _require_srg(g, (50, 7, 0, 1), 'Hoffman-Singleton')


def build_moore_graph(degree):
    """The Moore graph of diameter 2 and the given degree (2, 3 or 7)."""
    builders = {2: lambda: build_cycle(5), 3: build_petersen,
                7: build_hoffman_singleton}
    try:
        return builders[degree]()
    except KeyError:
        raise ArgumentError(
            'no Moore graph of degree {} is available'.format(degree)
        ) from None


def build_complement(g):
    full = g.full_mask
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def build_line_graph(g):
    """Line graph whose vertex i is the i-th edge of ``g.edges()``."""
    edges = g.edges()
    if not 1 <= len(edges) <= MAX_VERTICES:
        raise GraphSizeError('line graph would have {} vertices'.format(
            len(edges)
        ))
    adjacent = [
        (i, j)
        for (i, e), (j, f) in itertools.combinations(enumerate(edges), 2)
        if set(e) & set(f)
    ]
    return Graph.from_edges(len(edges), adjacent)


def build_disjoint_union(first, second):
    n = first.n + second.n
    if n > MAX_VERTICES:
        raise GraphSizeError('disjoint union would have {} vertices'.format(n))
    rows = list(first.adj) + [row << first.n for row in second.adj]
    return Graph(n, rows)


def random_connected_graph(n, p, seed=None):
    """A random spanning tree on n vertices plus each other edge with
    probability p."""
    _check_order(n)
    if not 0.0 <= p <= 1.0:
        raise ArgumentError('edge probability must be in [0, 1]')
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


_EDGE_LINE = re.compile(r'(\d+) (\d+)', re.ASCII)
_ORDER_LINE = re.compile(r'n=(\d+)', re.ASCII)


def parse_edge_list(text):
    """Parse ``u v`` lines; ``#`` starts a comment and an optional first
    ``n=<k>`` line fixes the vertex count."""
    n = None
    order_line = None
    edges = []
    seen = set()
    started = False
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        match = _ORDER_LINE.fullmatch(line)
        if match:
            if started:
                raise EdgeListError(
                    number, 'n=<k> must come before the first edge'
                )
            n = int(match.group(1))
            order_line = number
            started = True
            continue
        started = True
        match = _EDGE_LINE.fullmatch(line)
        if not match:
            raise EdgeListError(number, 'expected "u v", got {!r}'.format(line))
        u, v = int(match.group(1)), int(match.group(2))
        if u == v:
            raise EdgeListError(number, 'self-loop at {}'.format(u))
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(number, 'duplicate edge {} {}'.format(*key))
        seen.add(key)
        edges.append(key)
    largest = max((v for edge in edges for v in edge), default=-1)
    if n is None:
        n = largest + 1
    elif largest >= n:
        raise EdgeListError(order_line, 'vertex {} exceeds n={}'.format(
            largest, n
        ))
    return Graph.from_edges(n, edges)


def read_edge_list(path):
    with open(path, encoding='utf-8') as handle:
        g = parse_edge_list(handle.read())
    logger.info('read %r from %s', g, path)
    return g


def write_edge_list(g, sink):
    sink.write('n={}\n'.format(g.n))
    for u, v in g.edges():
        sink.write('{} {}\n'.format(u, v))
