import pytest


def test_deep_path(scckit_run):
    assert scckit_run('gen', '--family', 'deep-path', '-n', 3) == (
        0, '3 2\n1 2\n2 3\n', '')


def test_cycle_chain(scckit_run):
    assert scckit_run('gen', '--family', 'cycle-chain', '-n', 4,
                      '--cycles', 2).out == '4 5\n1 2\n2 1\n3 4\n4 3\n1 3\n'


def test_default(scckit_run):
    result = scckit_run('gen')
    assert result.status == 0
    assert result.out == '10 0\n'


def test_seeded(scckit_run):
    first = scckit_run('gen', '-n', 8, '-m', 20, '--seed', 5).out
    again = scckit_run('gen', '-n', 8, '-m', 20, '--seed', 5).out
    assert first == again
    assert first.startswith('8 20\n')


def test_output_file(scckit_run, tmpdir):
    path = tmpdir.join('g.txt')
    scckit_run('gen', '--family', 'complete', '-n', 2, '-o', path)
    assert path.read() == '2 2\n1 2\n2 1\n'


def test_bad_spec(scckit_run):
    result = scckit_run('gen', '--family', 'cycle-chain', '-n', 2,
                        '--cycles', 3)
    assert result.status == 1
    assert 'BAD_SPEC: cannot split 2 vertices into 3 cycles' in result.err


@pytest.mark.parametrize('argv', [
    ['--family', 'tree'],
    ['-n', 'many'],
])
def test_usage(scckit_run, argv):
    result = scckit_run('gen', *argv)
    assert result.status == 1
    assert 'usage:' in result.err
