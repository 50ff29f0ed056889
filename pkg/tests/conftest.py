"""Local py.test plugin."""

import types

import pytest

import scckit.core
import scckit.graph
import scckit.hookspec
import scckit.pm
import scckit.testkit


def pytest_addoption(parser):
    parser.addoption(
        '--corpus-size',
        type=int,
        default=40,
        help='Graphs per family in the generated corpus (default 40, '
             'the full corpus has 1000)',
    )


@pytest.fixture
def pm():
    """A PluginManager with the scckit hookspec."""
    return scckit.pm.PluginManager(scckit.hookspec)


@pytest.fixture
def config(pm):
    """A scckit.core.Config instance."""
    ns = types.SimpleNamespace()
    ns.command = None
    return scckit.core.Config(pm, ns)


@pytest.fixture
def triangle():
    """The cycle 1 -> 2 -> 3 -> 1."""
    return scckit.graph.build_graph(3, [(1, 2), (2, 3), (3, 1)])


@pytest.fixture
def one_arc():
    """The single arc 1 -> 2."""
    return scckit.graph.build_graph(2, [(1, 2)])


@pytest.fixture
def two_cycles():
    """Cycles {1, 2} and {3, 4} joined by the arc 2 -> 3."""
    return scckit.graph.build_graph(
        4, [(1, 2), (2, 1), (2, 3), (3, 4), (4, 3)])


@pytest.fixture(scope='session')
def corpus_size(request):
    return request.config.getoption('--corpus-size')


@pytest.fixture(scope='session')
def corpus(corpus_size):
    """The generated test corpus as a list of (GenSpec, Graph)."""
    return list(scckit.testkit.corpus(per_family=corpus_size))


@pytest.fixture(scope='session')
def small_corpus():
    """A few graphs of every family, for the slower checks."""
    return list(scckit.testkit.corpus(per_family=25, max_n=24, max_m=96))


@pytest.fixture
def hookrec(pm, monkeypatch):    # pylint: disable=unused-argument
    """Record every hook call made while the test runs.

    ``hookrec.calls`` lists ``(hookname, kwargs)`` in call order, for
    the ``pm`` fixture and any other plugin manager alike.
    """
    rec = types.SimpleNamespace(calls=[])
    call = scckit.pm.HookCaller.__call__

    def recording_call(caller, **kwargs):
        rec.calls.append((caller.name, kwargs))
        return call(caller, **kwargs)
    monkeypatch.setattr(scckit.pm.HookCaller, '__call__', recording_call)
    return rec
