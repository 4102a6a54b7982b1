import io

import pytest
from mutualvis.errors import LpFormatError
from mutualvis.graph import Graph, build_complete
from mutualvis.lpformat import build_ip_model, export_lp, parse_lp

K2_LP = '''Maximize
obj: x0 + x1
Subject To
c0: x1 + x0 <= 2
c1: x0 + x1 <= 2
Binary
x0 x1
End
'''


def export(g):
    sink = io.StringIO()
    export_lp(build_ip_model(g), sink)
    return sink.getvalue()


def test_k2_text():
    assert export(build_complete(2)) == K2_LP


def test_single_vertex_text():
    assert export(Graph(1, [0])).splitlines() == [
        'Maximize', 'obj: x0', 'Subject To', 'c0: 0 x0 <= 1', 'Binary', 'x0',
        'End'
    ]


def test_petersen_rows(petersen):
    lines = export(petersen).splitlines()
    assert 'c0: x7 + x8 + x9 + 3 x0 <= 4' in lines
    assert sum(1 for line in lines if line.startswith('c')) == 10


def test_model(petersen):
    model = build_ip_model(petersen)
    row = model.constraints[0]
    assert list(row.neighbours) == [7, 8, 9]
    assert (row.self_coefficient, row.rhs) == (3, 4)
    assert list(model.objective) == [1] * 10


def test_parse_round_trip(petersen):
    model = parse_lp(export(petersen))
    assert model == build_ip_model(petersen)
    assert model.to_graph() == petersen


def test_parse_isolated_vertex():
    g = Graph(3, [0b010, 0b001, 0])
    assert parse_lp(export(g)).to_graph() == g


@pytest.mark.parametrize('old, new', [
    ('End\n', ''),
    ('c0: x1 + x0', 'c0: 2 x1 + x0'),
    ('c0: x1 + x0', 'c0: x1 + y0'),
    ('c1: x0 + x1 <= 2\n', ''),
    ('x0 x1', 'x0 x2'),
    ('Maximize\n', 'Minimize\n'),
    ('c0: x1 + x0 <= 2', 'c0: x1 <= 2'),
])
def test_parse_invalid(old, new):
    with pytest.raises(LpFormatError):
        parse_lp(K2_LP.replace(old, new))


@pytest.mark.parametrize('old, new', [
    ('c0: x1 + x0 <= 2', 'c0: x1 + x0 <= 3'),
    ('obj: x0 + x1', 'obj: x0'),
    ('c0: x1 + x0 <= 2', 'c0: 0 x0 <= 1'),
])
def test_to_graph_rejects_other_models(old, new):
    model = parse_lp(K2_LP.replace(old, new))
    with pytest.raises(LpFormatError):
        model.to_graph()
