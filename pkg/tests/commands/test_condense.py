def test_comments(scckit_run, two_cycles_file):
    assert scckit_run('condense', two_cycles_file) == (
        0, '2 1\n2 1\n# comp leader\n# 1 3\n# 2 1\n', '')


def test_leaders_file(scckit_run, two_cycles_file, tmpdir):
    path = tmpdir.join('leaders.txt')
    result = scckit_run('condense', '--leaders', path, two_cycles_file)
    assert result.out == '2 1\n2 1\n'
    assert path.read() == '1 3\n2 1\n'


def test_algorithms_agree(scckit_run, two_cycles_file):
    outputs = {scckit_run('condense', '-a', alg, two_cycles_file).out
               for alg in 'tcb'}
    assert len(outputs) == 1


def test_acyclic_output(scckit_run, graph_file, tmpdir):
    text = scckit_run('condense', graph_file('3 3\n1 2\n2 3\n3 1\n')).out
    cond = graph_file(text, name='cond.txt')
    result = scckit_run('scc', cond)
    assert result.out == 'order=reverse-topological\n1: 1\n'


def test_empty(scckit_run, graph_file):
    assert scckit_run('condense', graph_file('0 0\n')).out == (
        '0 0\n# comp leader\n')
