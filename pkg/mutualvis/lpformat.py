"""Integer program for maximum dissociation sets in CPLEX LP format.

Each vertex v gets a binary x_v and one row::

    sum(x_u for u in N(v)) + deg(v) * x_v <= 1 + deg(v)

so a chosen vertex keeps at most one chosen neighbour, while an unchosen
vertex leaves the row slack. The objective maximizes ``sum(x_v)``.
"""
import logging
import re

from .errors import ArgumentError, GraphSizeError, LpFormatError
from .graph import Graph, iter_bits, popcount
from .records import Array, Field, Record

logger = logging.getLogger(__name__)


class LpConstraint(Record):
    name = Field(str)
    variable = Field(int)
    neighbours = Field(Array[int])
    self_coefficient = Field(int)
    rhs = Field(int)


class IpModel(Record):
    n = Field(int)
    objective = Field(Array[int])
    constraints = Field(Array[LpConstraint])

    def to_graph(self):
        """Rebuild the graph, rejecting models outside this IP family."""
        if len(self.objective) != self.n or any(
                c != 1 for c in self.objective):
            raise LpFormatError(None, 'objective must be the all-ones sum')
        if len(self.constraints) != self.n:
            raise LpFormatError(None, 'expected one constraint per variable')
        edges = []
        for v, row in enumerate(self.constraints):
            if row.variable != v or row.name != 'c{}'.format(v):
                raise LpFormatError(
                    None, 'constraint {} is out of order'.format(row.name)
                )
            degree = len(row.neighbours)
            if row.self_coefficient != degree or row.rhs != degree + 1:
                raise LpFormatError(
                    None, 'constraint {} does not match deg({}) = {}'.format(
                        row.name, v, degree
                    )
                )
            edges.extend((v, u) for u in row.neighbours)
        try:
            g = Graph.from_edges(self.n, edges)
        except (ArgumentError, GraphSizeError) as exc:
            raise LpFormatError(None, str(exc)) from None
        for v, row in enumerate(self.constraints):
            if popcount(g.adj[v]) != len(row.neighbours):
                raise LpFormatError(
                    None, 'constraint {} is not symmetric'.format(row.name)
                )
        return g


def build_ip_model(g):
    constraints = []
    for v in range(g.n):
        degree = g.degree(v)
        constraints.append(LpConstraint(
            name='c{}'.format(v),
            variable=v,
            neighbours=list(iter_bits(g.adj[v])),
            self_coefficient=degree,
            rhs=degree + 1,
        ))
    return IpModel(n=g.n, objective=[1] * g.n, constraints=constraints)


def _term(coefficient, variable):
    if coefficient == 1:
        return 'x{}'.format(variable)
    return '{} x{}'.format(coefficient, variable)


def export_lp(model, sink):
    sink.write('Maximize\n')
    sink.write('obj: {}\n'.format(' + '.join(
        _term(c, v) for v, c in enumerate(model.objective)
    )))
    sink.write('Subject To\n')
    for row in model.constraints:
        terms = [_term(1, u) for u in row.neighbours]
        terms.append(_term(row.self_coefficient, row.variable))
        sink.write('{}: {} <= {}\n'.format(row.name, ' + '.join(terms),
                                           row.rhs))
    sink.write('Binary\n')
    sink.write(' '.join('x{}'.format(v) for v in range(model.n)) + '\n')
    sink.write('End\n')
    logger.debug('wrote LP model with %d rows', len(model.constraints))


_SECTIONS = {
    'maximize': 'objective', 'maximise': 'objective', 'max': 'objective',
    'subject to': 'constraints', 'st': 'constraints', 's.t.': 'constraints',
    'binary': 'binary', 'binaries': 'binary', 'bin': 'binary',
}
_TERM = re.compile(r'(?:(\d+) )?x(\d+)', re.ASCII)
_ROW = re.compile(r'(\w+):\s*(.+?)\s*<=\s*(\d+)', re.ASCII)


def _parse_terms(text, number):
    terms = []
    for part in text.split(' + '):
        match = _TERM.fullmatch(part.strip())
        if not match:
            raise LpFormatError(number, 'invalid term {!r}'.format(part))
        coefficient = 1 if match.group(1) is None else int(match.group(1))
        terms.append((coefficient, int(match.group(2))))
    return terms


def parse_lp(text):
    """Read back a model written by ``export_lp``."""
    section = None
    objective = None
    rows = {}
    binaries = []
    finished = False
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith('\\'):
            continue
        lowered = line.lower()
        if lowered in _SECTIONS:
            section = _SECTIONS[lowered]
            continue
        if lowered == 'end':
            finished = True
            break
        if section == 'objective':
            _, _, expression = line.rpartition(':')
            objective = _parse_terms(expression, number)
        elif section == 'constraints':
            match = _ROW.fullmatch(line)
            if not match:
                raise LpFormatError(number, 'invalid constraint {!r}'.format(
                    line
                ))
            name = match.group(1)
            if name in rows:
                raise LpFormatError(number, 'duplicate constraint ' + name)
            rows[name] = (number, _parse_terms(match.group(2), number),
                          int(match.group(3)))
        elif section == 'binary':
            binaries.extend(line.split())
        else:
            raise LpFormatError(number, 'text before the Maximize section')
    if not finished:
        raise LpFormatError(None, 'missing End')
    if objective is None:
        raise LpFormatError(None, 'missing objective')

    n = len(binaries)
    if binaries != ['x{}'.format(v) for v in range(n)]:
        raise LpFormatError(None, 'binaries must be x0..x{}'.format(n - 1))
    weights = [0] * n
    for coefficient, v in objective:
        if v >= n:
            raise LpFormatError(None, 'objective names unknown x{}'.format(v))
        weights[v] += coefficient

    constraints = []
    for v in range(n):
        name = 'c{}'.format(v)
        if name not in rows:
            raise LpFormatError(None, 'missing constraint ' + name)
        number, terms, rhs = rows.pop(name)
        neighbours = []
        own = None
        for coefficient, u in terms:
            if u >= n:
                raise LpFormatError(number, 'unknown variable x{}'.format(u))
            if u == v:
                own = coefficient
            elif coefficient != 1:
                raise LpFormatError(
                    number, 'neighbour x{} must have coefficient 1'.format(u)
                )
            else:
                neighbours.append(u)
        if own is None:
            raise LpFormatError(number, '{} lacks its own variable'.format(
                name
            ))
        constraints.append(LpConstraint(
            name=name, variable=v, neighbours=sorted(neighbours),
            self_coefficient=own, rhs=rhs,
        ))
    if rows:
        raise LpFormatError(None, 'unexpected constraints {}'.format(
            sorted(rows)
        ))
    return IpModel(n=n, objective=weights, constraints=constraints)
