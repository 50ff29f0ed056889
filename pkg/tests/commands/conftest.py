import collections

import pytest

import scckit.__main__


Outcome = collections.namedtuple('Outcome', ['status', 'out', 'err'])


@pytest.fixture
def scckit_run(capsys):
    """Run the scckit command line, returning status and captured output."""

    def run(*argv):
        try:
            status = scckit.__main__.main(argv=[str(arg) for arg in argv])
        except SystemExit as exc:
            status = exc.code
        out, err = capsys.readouterr()
        return Outcome(status, out, err)
    return run


@pytest.fixture
def graph_file(tmpdir):
    """Write an edge list to a file, returning its path."""

    def write(text, name='graph.txt'):
        path = tmpdir.join(name)
        path.write(text)
        return str(path)
    return write


@pytest.fixture
def triangle_file(graph_file):
    return graph_file('3 3\n1 2\n2 3\n3 1\n')


@pytest.fixture
def two_cycles_file(graph_file):
    return graph_file('4 5\n1 2\n2 1\n2 3\n3 4\n4 3\n')


@pytest.fixture
def low_limit(tmpdir):
    """Settings file warning about the recursive engine above 2 vertices."""
    path = tmpdir.join('settings.yaml')
    path.write('cli: {recursive_warn_vertices: 2}\n')
    return str(path)
