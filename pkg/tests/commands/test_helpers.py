import io
import re
import sys
import types

import pytest

import scckit.commands
import scckit.errors
import scckit.settings
from scckit.commands import Algorithm
from scckit.dfs import EngineKind


@pytest.fixture
def low_config(low_limit):
    return types.SimpleNamespace(settings=scckit.settings.load(low_limit))


def test_warn_recursive(loghandler, low_config, triangle):
    scckit.commands.warn_recursive(low_config, triangle, EngineKind.RECURSIVE)
    assert loghandler.has_warning(re.compile(r'Recursive engine on 3 '))


@pytest.mark.parametrize('engine', [EngineKind.V_STACK, EngineKind.A_STACK])
def test_warn_recursive_other_engine(loghandler, low_config, triangle,
                                     engine):
    scckit.commands.warn_recursive(low_config, triangle, engine)
    assert not loghandler.has_warning()


def test_warn_recursive_small(loghandler, config, triangle):
    scckit.commands.warn_recursive(config, triangle, EngineKind.RECURSIVE)
    assert not loghandler.has_warning()


def test_read_graph_logs(loghandler, tmpdir, triangle):
    path = tmpdir.join('g.txt')
    path.write('3 3\n1 2\n2 3\n3 1\n')
    assert scckit.commands.read_graph(str(path)) == triangle
    assert loghandler.has_info(re.compile(r'3 vertices and 3 arcs'))


def test_read_stdin(monkeypatch):
    monkeypatch.setattr(sys, 'stdin', io.StringIO('text'))
    assert scckit.commands.read_text('-') == 'text'


def test_write_unwritable(tmpdir):
    with pytest.raises(scckit.errors.UsageError):
        scckit.commands.write_text(str(tmpdir.join('no', 'such', 'f')), '')


@pytest.mark.parametrize('algorithm', list(Algorithm))
def test_find_components(two_cycles, algorithm):
    scc = scckit.commands.find_components(two_cycles, algorithm,
                                          EngineKind.V_STACK, stop_early=True)
    assert scc.partition() == frozenset([frozenset([1, 2]),
                                         frozenset([3, 4])])


@pytest.mark.parametrize('algorithm', [Algorithm.C, Algorithm.B])
@pytest.mark.parametrize('flag', ['encode_leader_bits', 'numeric_components',
                                  'record_lowarcs'])
def test_find_components_unsupported(two_cycles, algorithm, flag):
    with pytest.raises(scckit.errors.UnsupportedError):
        scckit.commands.find_components(two_cycles, algorithm, **{flag: True})


def test_command_other_name(config):
    config.args.command = 'other'
    assert scckit.commands.Command().scckit_command(config) is None


def test_command_run_abstract(config):
    command = scckit.commands.Command()
    config.args.command = command.NAME
    with pytest.raises(NotImplementedError):
        command.scckit_command(config)
