"""Closed-form upper bounds on mutual-visibility sets.

The counting bounds rest on one identity. Let S be a mutually visible set
of a d-regular triangle-free graph in which every non-adjacent pair has a
unique common neighbour, e the number of edges inside S, T the complement
and k_t the number of S-neighbours of t in T. Then::

    C(s, 2) - e == sum(C(k_t, 2) for t in T)
    sum(k_t for t in T) == d*s - 2*e

Convexity of C(k, 2) turns this into a necessary condition on (s, e),
exposed as ``counting_slack``.
"""
import logging
import warnings
from math import comb, isqrt

from .errors import ArgumentError, BoundRangeError, BoundRegimeWarning, \
    HypothesisError
from .records import Field, Record, Table

logger = logging.getLogger(__name__)

JENSEN_REGIME = 8
INT64_MAX = 2 ** 63 - 1


def _largest_root(b, c):
    """Largest integer s >= 0 with s*s + b*s - c <= 0, for c >= 0."""
    s = max(0, (isqrt(b * b + 4 * c) - b) // 2)
    while (s + 1) * (s + 1) + b * (s + 1) - c <= 0:
        s += 1
    while s > 0 and s * s + b * s - c > 0:
        s -= 1
    return s


def _positive(name, value, minimum=1):
    if isinstance(value, bool) or not isinstance(value, int) or \
            value < minimum:
        raise ArgumentError('{} must be an integer >= {}, got {!r}'.format(
            name, minimum, value
        ))


def diameter_two_bound(n, max_degree):
    """Bound for any graph of diameter 2 with maximum degree max_degree."""
    _positive('n', n, 2)
    _positive('max_degree', max_degree, 2)
    d = max_degree
    return _largest_root(d * d - 2 * d - 1, d * (d - 1) * n)


def _counting_hypothesis(d):
    if isinstance(d, bool) or not isinstance(d, int) or d < 3:
        raise HypothesisError('degree must be at least 3, got {!r}'.format(d))


def unique_neighbour_bound(n, d):
    """Bound for d-regular triangle-free graphs with unique common
    neighbours."""
    _positive('n', n)
    _counting_hypothesis(d)
    return isqrt(4 + d * (d - 1) * n) - 2


def degree_count_bound(n, d):
    _positive('n', n)
    _positive('d', d)
    return d * n // (2 * d - 1)


def jensen_bound(n, d):
    """Largest s allowed by the counting identity with a perfectly matched
    S; derived for s >= JENSEN_REGIME."""
    _positive('n', n)
    _counting_hypothesis(d)
    s = _largest_root((d - 1) ** 2 + (d - 3) - n, n * (d - 3))
    if s < JENSEN_REGIME:
        warnings.warn(
            'value {} lies below the s >= {} regime of the counting '
            'argument'.format(s, JENSEN_REGIME),
            BoundRegimeWarning, stacklevel=2
        )
    return s


def moore_bound(d, k):
    """1 + d * sum((d-1)**i for i < k): the largest order of a graph of
    maximum degree d and diameter k."""
    _positive('d', d, 2)
    _positive('k', k)
    total, layer = 1, d
    for _ in range(k):
        total += layer
        if total > INT64_MAX:
            raise BoundRangeError(
                'Moore bound for d={}, k={} exceeds 64 bits'.format(d, k)
            )
        layer *= d - 1
    return total


def counting_slack(n, d, s, e):
    """Non-negative when the counting identity admits (s, e).

    For s < n this is 2(n-s)(C(s,2)-e) - K(K-(n-s)) with K = d*s - 2*e.
    """
    if not 0 <= s <= n or not 0 <= e <= s // 2:
        raise ArgumentError('need 0 <= s <= n and 0 <= e <= s/2')
    spread = d * s - 2 * e
    if s == n:
        return 0 if spread == 0 and comb(s, 2) == e else -1
    slots = n - s
    return 2 * slots * (comb(s, 2) - e) - spread * (spread - slots)


def counting_cap(n, d):
    """Largest s for which some e passes ``counting_slack``."""
    for s in range(n, -1, -1):
        if any(counting_slack(n, d, s, e) >= 0 for e in range(s // 2 + 1)):
            return s
    return 0


def forced_structure(n, d, s):
    """``(e, k)`` when size s admits a single edge count e and meets it with
    equality, which forces every vertex of T to see exactly k vertices of
    S; None otherwise."""
    if s >= n:
        return None
    admissible = [e for e in range(s // 2 + 1)
                  if counting_slack(n, d, s, e) >= 0]
    if len(admissible) != 1 or counting_slack(n, d, s, admissible[0]):
        return None
    e = admissible[0]
    spread = d * s - 2 * e
    if spread % (n - s):
        return None
    return e, spread // (n - s)


class Applicability(Record):
    holds = Field(bool)
    reason = Field(str, optional=True)
    note = Field(str, optional=True)


class BoundReport(Record):
    """Bound values for one graph; absent values failed their hypotheses."""
    diameter_two = Field(int, optional=True)
    unique_neighbour = Field(int, optional=True)
    degree_count = Field(int, optional=True)
    jensen = Field(int, optional=True)
    moore_n = Field(int, optional=True)
    applicability = Field(Table[Applicability])


def _failed(checks):
    for holds, reason in checks:
        if not holds:
            return reason
    return None


def bound_report(g):
    profile = g.profile()
    n, d = profile.n, profile.degree

    counting = [
        (profile.unique_common_neighbour, 'unique-common-neighbour fails'),
        (profile.triangle_free, 'graph has a triangle'),
        (profile.is_regular, 'graph is not regular'),
    ]
    hypotheses = {
        'diameter_two': [
            (profile.connected, 'graph is disconnected'),
            (profile.diameter == 2,
             'diameter is {} not 2'.format(profile.diameter)),
            (profile.max_degree >= 2, 'maximum degree below 2'),
        ],
        'unique_neighbour': counting + [
            (d is not None and d >= 3, 'degree below 3'),
        ],
        'degree_count': counting + [
            (d is not None and d >= 1, 'graph has no edges'),
        ],
        'jensen': counting + [
            (d is not None and d >= 3, 'degree below 3'),
        ],
        'moore_n': [
            (profile.is_regular, 'graph is not regular'),
            (profile.connected, 'graph is disconnected'),
            (d is not None and d >= 2, 'degree below 2'),
            (profile.diameter is not None and profile.diameter >= 1,
             'graph has a single vertex'),
        ],
    }
    compute = {
        'diameter_two': lambda: diameter_two_bound(n, profile.max_degree),
        'unique_neighbour': lambda: unique_neighbour_bound(n, d),
        'degree_count': lambda: degree_count_bound(n, d),
        'jensen': lambda: jensen_bound(n, d),
        'moore_n': lambda: moore_bound(d, profile.diameter),
    }

    values = {}
    applicability = {}
    for name, checks in hypotheses.items():
        reason = _failed(checks)
        if reason is not None:
            applicability[name] = Applicability(holds=False, reason=reason)
            continue
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', BoundRegimeWarning)
            values[name] = compute[name]()
        note = None
        if name == 'jensen' and values[name] < JENSEN_REGIME:
            note = 'below the s >= {} regime of the derivation'.format(
                JENSEN_REGIME
            )
        elif name == 'moore_n' and values[name] == n:
            note = 'attained'
        applicability[name] = Applicability(holds=True, note=note)
    logger.debug('bounds for %r: %s', g, values)
    return BoundReport(applicability=applicability, **values)
