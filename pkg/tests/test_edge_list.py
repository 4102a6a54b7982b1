import io

import pytest
from mutualvis.errors import EdgeListError, GraphSizeError
from mutualvis.graph import (Graph, build_petersen, parse_edge_list,
                             read_edge_list, write_edge_list)


def test_parse():
    text = '# a path\nn=4\n0 1\n\n1 2  \n# done\n'
    g = parse_edge_list(text)
    assert g.n == 4
    assert g.edges() == [(0, 1), (1, 2)]


def test_parse_infers_order():
    assert parse_edge_list('2 0\n').n == 3


def test_write_then_read(tmpdir):
    g = Graph.from_edges(4, [(0, 1)])
    path = tmpdir.join('graph.txt')
    with open(str(path), 'w') as handle:
        write_edge_list(g, handle)
    assert path.read().splitlines() == ['n=4', '0 1']
    assert read_edge_list(str(path)) == g


def test_write_petersen():
    sink = io.StringIO()
    write_edge_list(build_petersen(), sink)
    assert parse_edge_list(sink.getvalue()) == build_petersen()


@pytest.mark.parametrize('text, line', [
    ('0 1\n1 0\n', 2),
    ('0 1\n3 3\n', 2),
    ('0 1\n0,2\n', 2),
    ('# header\n0  1\n', 2),
    ('0 1\nn=3\n', 2),
    ('n=2\n0 1\n1 2\n', 1),
    ('0 x\n', 1),
])
def test_parse_invalid(text, line):
    with pytest.raises(EdgeListError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert 'line {}'.format(line) in str(info.value)


def test_parse_empty():
    with pytest.raises(GraphSizeError):
        parse_edge_list('# nothing\n')


def test_read_missing(tmpdir):
    with pytest.raises(OSError):
        read_edge_list(str(tmpdir.join('missing.txt')))
