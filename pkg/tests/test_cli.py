import json

import pytest
from mutualvis.cli import main
from mutualvis.graph import _hoffman_singleton_edges


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_profile(capsys):
    code, out, _ = run(capsys, 'profile', '--graph', 'petersen')
    assert code == 0
    data = json.loads(out)
    assert data['srg'] == [10, 3, 0, 1]
    assert data['dissociation_class'] is True


def test_check_visible_set(capsys):
    code, out, _ = run(capsys, 'check', '--graph', 'petersen', '--set',
                       '0,5,7')
    assert code == 0
    data = json.loads(out)
    assert data['is_mv'] is True
    assert data['checker'] == 'dissociation'
    assert data['analysis']['e_S'] == 1


def test_check_hidden_set(capsys):
    code, out, _ = run(capsys, 'check', '--graph', 'cycle:5', '--set',
                       '0,1,2')
    assert code == 1
    assert json.loads(out)['is_mv'] is False


def test_check_empty_set(capsys):
    code, out, _ = run(capsys, 'check', '--graph', 'cycle:7', '--set', '')
    assert code == 0
    assert json.loads(out)['is_mv'] is True


def test_check_out_of_range(capsys):
    code, _, err = run(capsys, 'check', '--graph', 'petersen', '--set',
                       '0,10')
    assert code == 2
    assert 'out of range' in err


def test_check_certificate(capsys, tmpdir):
    code, out, _ = run(capsys, 'mu', '--graph', 'petersen')
    path = tmpdir.join('result.json')
    path.write(out)
    code, out, _ = run(capsys, 'check', '--graph', 'petersen',
                       '--certificate', str(path))
    assert code == 0
    assert len(json.loads(out)['set']) == 6


@pytest.mark.parametrize('spec', ['dodecahedron', 'cycle:x', 'file:'])
def test_unknown_graph(capsys, spec):
    with pytest.raises(SystemExit) as info:
        main(['profile', '--graph', spec])
    assert info.value.code == 2


def test_missing_file(capsys, tmpdir):
    path = tmpdir.join('missing.txt')
    code, _, err = run(capsys, 'profile', '--graph', 'file:' + str(path))
    assert code == 2
    assert 'cannot open' in err


def test_graph_from_file(capsys, tmpdir):
    path = tmpdir.join('c5.txt')
    path.write('0 1\n1 2\n2 3\n3 4\n4 0\n')
    code, out, _ = run(capsys, 'mu', '--graph', 'file:' + str(path))
    assert code == 0
    assert json.loads(out)['optimum'] == 3


def test_invalid_cycle_size(capsys):
    code, _, err = run(capsys, 'profile', '--graph', 'cycle:2')
    assert code == 2
    assert err


def test_polynomial(capsys):
    code, out, _ = run(capsys, 'polynomial', '--graph', 'petersen')
    assert code == 0
    data = json.loads(out)
    assert data['coefficients'] == [1, 10, 45, 90, 80, 30, 5, 0, 0, 0, 0]
    assert data['mu'] == 6
    assert data['polynomial'].startswith('1 + 10x + 45x^2')


def test_polynomial_count(capsys):
    code, out, _ = run(capsys, 'polynomial', '--graph', 'petersen',
                       '--count', '6')
    assert code == 0
    assert json.loads(out)['count'] == 5


def test_polynomial_by_type(capsys):
    code, out, _ = run(capsys, 'polynomial', '--graph', 'petersen',
                       '--by-type')
    assert code == 0
    assert json.loads(out)['by_type']['5'] == {'2K2+K1': 30}


def test_polynomial_refused(capsys):
    code, _, err = run(capsys, 'polynomial', '--graph', 'hoffman-singleton')
    assert code == 2
    assert '--force' in err


def test_mu(capsys):
    code, out, _ = run(capsys, 'mu', '--graph', 'petersen')
    assert code == 0
    data = json.loads(out)
    assert data['graph'] == 'petersen'
    assert data['optimum'] == 6
    assert data['proven'] is True
    assert len(data['certificate']) == 6


def test_mu_exhaustive_canonical(capsys):
    _, exhaustive, _ = run(capsys, 'mu', '--graph', 'petersen',
                           '--exhaustive')
    _, canonical, _ = run(capsys, 'mu', '--graph', 'petersen', '--canonical')
    assert json.loads(exhaustive)['certificate'] == \
        json.loads(canonical)['certificate']


def test_mu_limit(capsys):
    code, out, _ = run(capsys, 'mu', '--graph', 'cycle:6', '--limit-nodes',
                       '1')
    assert code == 3
    assert json.loads(out)['proven'] is False


@pytest.mark.parametrize('flag, value', [('--limit-nodes', '0'),
                                         ('--limit-ms', '-5')])
def test_mu_invalid_limit(capsys, flag, value):
    code, out, err = run(capsys, 'mu', '--graph', 'cycle:6', flag, value)
    assert code == 2
    assert out == ''
    assert 'limit' in err


def test_mu_disconnected(capsys, tmpdir):
    path = tmpdir.join('two.txt')
    path.write('n=4\n0 1\n2 3\n')
    code, _, err = run(capsys, 'mu', '--graph', 'file:' + str(path))
    assert code == 2
    assert 'connected' in err


def test_induced_matching(capsys):
    code, out, _ = run(capsys, 'induced-matching', '--graph', 'petersen')
    assert code == 0
    data = json.loads(out)
    assert data['optimum'] == 3
    assert len(data['edges']) == 3


def test_induced_matching_count(capsys):
    code, out, _ = run(capsys, 'induced-matching', '--graph', 'petersen',
                       '--count', '2')
    assert code == 0
    assert json.loads(out)['count'] == 15


def test_bounds(capsys):
    code, out, _ = run(capsys, 'bounds', '--graph', 'hoffman-singleton')
    assert code == 0
    data = json.loads(out)
    assert (data['diameter_two'], data['unique_neighbour'],
            data['degree_count'], data['jensen']) == (31, 43, 26, 20)


def test_export_lp_stdout(capsys):
    code, out, _ = run(capsys, 'export-lp', '--graph', 'complete:2')
    assert code == 0
    assert out.splitlines()[3] == 'c0: x1 + x0 <= 2'


def test_export_lp_file(capsys, tmpdir):
    path = tmpdir.join('petersen.lp')
    code, out, _ = run(capsys, 'export-lp', '--graph', 'petersen', '--out',
                       str(path))
    assert code == 0
    assert out == ''
    assert path.read().startswith('Maximize\n')


def test_verify_paper_petersen(capsys):
    code, out, _ = run(capsys, 'verify-paper', '--only', 'petersen')
    assert code == 0
    assert 'FAIL' not in out
    assert out.splitlines()[-1] == '6 checks, 0 failed'


def test_verify_paper_detects_corrupted_construction(capsys, mocker):
    mocker.patch('mutualvis.graph._hoffman_singleton_edges',
                 return_value=_hoffman_singleton_edges()[1:])
    code, out, _ = run(capsys, 'verify-paper', '--only', 'hoffman-singleton')
    assert code == 1
    assert 'ConstructionError' in out


def test_verbose_logging(capsys):
    code, _, _ = run(capsys, '-vv', 'bounds', '--graph', 'petersen')
    assert code == 0
