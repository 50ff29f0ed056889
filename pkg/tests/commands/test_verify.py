import pytest


@pytest.fixture
def scc_file(tmpdir):
    def write(text):
        path = tmpdir.join('scc.txt')
        path.write(text)
        return str(path)
    return write


@pytest.mark.parametrize('algorithm', ['t', 'c', 'b'])
def test_accept_scc_output(scckit_run, two_cycles_file, scc_file, algorithm):
    claimed = scckit_run('scc', '-a', algorithm, two_cycles_file).out
    assert scckit_run('verify', '--scc', scc_file(claimed),
                      two_cycles_file) == (0, 'ACCEPT\n', '')


def test_accept_other_leader(scckit_run, two_cycles_file, scc_file):
    path = scc_file('order=reverse-topological\n4: 4 3\n2: 2 1\n')
    assert scckit_run('verify', '--scc', path, two_cycles_file).status == 0


def test_reject_merge(scckit_run, two_cycles_file, scc_file):
    path = scc_file('order=reverse-topological\n1: 1 2 3 4\n')
    assert scckit_run('verify', '--scc', path, two_cycles_file) == (
        3, '', 'REJECT: vertex 3 has no low arc\n')


def test_reject_split(scckit_run, triangle_file, scc_file):
    path = scc_file('order=reverse-topological\n2: 2 3\n1: 1\n')
    result = scckit_run('verify', '--scc', path, triangle_file)
    assert result.status == 3
    assert result.err.startswith('REJECT: ')


def test_reject_order(scckit_run, two_cycles_file, scc_file):
    path = scc_file('order=topological\n3: 3 4\n1: 1 2\n')
    result = scckit_run('verify', '--scc', path, two_cycles_file)
    assert result.status == 3
    assert 'goes against the component order' in result.err


def test_not_a_partition(scckit_run, two_cycles_file, scc_file):
    path = scc_file('order=reverse-topological\n1: 1 2\n')
    result = scckit_run('verify', '--scc', path, two_cycles_file)
    assert result.status == 3
    assert 'INVALID_PARTITION: vertex 3 is in no component' in result.err


def test_bad_scc_file(scckit_run, two_cycles_file, scc_file):
    result = scckit_run('verify', '--scc', scc_file('1: 1 2\n'),
                        two_cycles_file)
    assert result.status == 1
    assert 'PARSE_ERROR' in result.err


def test_scc_required(scckit_run, two_cycles_file):
    result = scckit_run('verify', two_cycles_file)
    assert result.status == 1
    assert 'usage:' in result.err
