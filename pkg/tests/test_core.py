import argparse
import unittest.mock

import logbook
import pytest

import scckit.errors
import scckit.pm
import scckit.settings

from scckit import core


@pytest.fixture
def mainconfig():
    config = unittest.mock.Mock()
    config.args.log_level = logbook.INFO
    config.args.config = None
    config.args.command = 'walk'
    return config


def register_main(pm, config, **hooks):
    """Register core.scckit_main with a parser returning config.

    Extra keyword arguments are added as hook implementations.
    """
    attrs = {'scckit_main': core.scckit_main}

    @scckit.pm.hookimpl
    def scckit_cmdline_parse(pluginmanager, argv):  # pylint: disable=unused-argument
        return config
    attrs['scckit_cmdline_parse'] = staticmethod(scckit_cmdline_parse)
    for name, func in hooks.items():
        func.__name__ = name
        attrs[name] = staticmethod(scckit.pm.hookimpl(func))
    pm.register(type('MainPlugin', (), attrs))


def test_scckit_main(pm, hookrec, mainconfig):
    register_main(pm, mainconfig, scckit_command=lambda config: 0)
    ret = pm.hooks.scckit_main(pluginmanager=pm, argv=[])
    assert ret == 0
    assert [c[0] for c in hookrec.calls] == ['scckit_main',
                                             'scckit_cmdline_parse',
                                             'scckit_configure',
                                             'scckit_command',
                                             'scckit_unconfigure']
    calls = dict(hookrec.calls)
    assert calls['scckit_configure'] == {'config': mainconfig}
    assert isinstance(mainconfig.settings, scckit.settings.Settings)


def test_scckit_main_no_command(pm, mainconfig, capsys):
    register_main(pm, mainconfig)
    assert pm.hooks.scckit_main(pluginmanager=pm, argv=[]) == 1
    _, stderr = capsys.readouterr()
    assert 'No plugin handles command walk' in stderr


@pytest.mark.parametrize('error, status', [
    (scckit.errors.ParseError('bad', 3), 1),
    (scckit.errors.OutOfRangeError('far'), 2),
    (scckit.errors.InvalidPartitionError('split'), 3),
    (scckit.errors.InternalInvariantError('broken'), 4),
])
def test_scckit_main_error(pm, hookrec, mainconfig, capsys, error, status):
    def scckit_command(config):  # pylint: disable=unused-argument
        raise error
    register_main(pm, mainconfig, scckit_command=scckit_command)
    assert pm.hooks.scckit_main(pluginmanager=pm, argv=[]) == status
    assert hookrec.calls[-1][0] == 'scckit_unconfigure'
    _, stderr = capsys.readouterr()
    assert '{}: {}'.format(error.code, error) in stderr


def test_scckit_main_recursion(pm, mainconfig, capsys):
    def scckit_command(config):  # pylint: disable=unused-argument
        raise RecursionError()
    register_main(pm, mainconfig, scckit_command=scckit_command)
    assert pm.hooks.scckit_main(pluginmanager=pm, argv=[]) == 1
    _, stderr = capsys.readouterr()
    assert '--engine a' in stderr


def test_scckit_exception_in_configure(pm, hookrec, mainconfig):

    class ConfigureFailed(Exception):
        pass

    def scckit_configure(config):  # pylint: disable=unused-argument
        raise ConfigureFailed()
    register_main(pm, mainconfig, scckit_configure=scckit_configure)
    with pytest.raises(ConfigureFailed):
        pm.hooks.scckit_main(pluginmanager=pm, argv=[])
    assert [c[0] for c in hookrec.calls] == ['scckit_main',
                                             'scckit_cmdline_parse',
                                             'scckit_configure',
                                             'scckit_unconfigure']


def test_scckit_main_bad_settings(pm, hookrec, mainconfig, tmpdir):
    path = tmpdir.join('settings.yaml')
    path.write('oracle: {limit: -1}\n')
    mainconfig.args.config = str(path)
    register_main(pm, mainconfig, scckit_command=lambda config: 0)
    assert pm.hooks.scckit_main(pluginmanager=pm, argv=[]) == 1
    assert 'scckit_configure' not in dict(hookrec.calls)


def test_scckit_cmdline_parse(pm, hookrec):
    class Sub:
        @staticmethod
        @scckit.pm.hookimpl
        def scckit_addcommand(subparsers):
            subparsers.add_parser('walk')
    pm.register(core)
    pm.register(Sub)
    config = core.scckit_cmdline_parse(pm, ['-l', 'debug', 'walk'])
    assert isinstance(config, core.Config)
    assert config.args.command == 'walk'
    assert config.args.log_level == logbook.DEBUG
    calls = dict(hookrec.calls)
    assert 'parser' in calls['scckit_addoption']
    assert 'subparsers' in calls['scckit_addcommand']


def test_scckit_cmdline_parse_help(pm, capsys):
    pm.register(core)
    with pytest.raises(SystemExit):
        core.scckit_cmdline_parse(pm, ['--help'])
    stdout, _ = capsys.readouterr()
    assert 'scckit' in stdout
    assert '--help' in stdout


def test_scckit_cmdline_parse_missing_command(pm, capsys):
    pm.register(core)
    with pytest.raises(SystemExit) as excinfo:
        core.scckit_cmdline_parse(pm, [])
    assert excinfo.value.code == 1
    _, stderr = capsys.readouterr()
    assert 'usage:' in stderr


def test_scckit_addoption(capsys):
    parser = argparse.ArgumentParser()
    core.scckit_addoption(parser)
    with pytest.raises(SystemExit):
        parser.parse_args(['--help'])
    stdout, _ = capsys.readouterr()
    assert '--version' in stdout
    assert '--log-level' in stdout
    assert '--trace' in stdout
    assert '--config' in stdout


class TestLogLevel:

    @pytest.fixture
    def parser(self):
        parser = core.ArgumentParser()
        core.scckit_addoption(parser)
        return parser

    def test_default(self, parser):
        assert parser.parse_args([]).log_level == logbook.WARNING

    @pytest.mark.parametrize('value, level', [
        ('info', logbook.INFO),
        ('ERROR', logbook.ERROR),
        (str(logbook.DEBUG), logbook.DEBUG),
    ])
    def test_value(self, parser, value, level):
        assert parser.parse_args(['-l', value]).log_level == level

    def test_invalid(self, parser):
        with pytest.raises(SystemExit) as excinfo:
            parser.parse_args(['--log-level', 'chatty'])
        assert excinfo.value.code == 1


class TestConfig:

    @pytest.fixture
    def config(self, pm):
        return core.Config(pm, argparse.Namespace())

    def test_settings_default(self, config):
        assert config.settings is scckit.settings.default()

    def test_addcommand(self, pm, config):
        plugin = pm.register(object(), 'walk')
        config.addcommand('walk', plugin)
        assert config.commands['walk'] is plugin

    def test_addcommand_by_name(self, pm, config):
        plugin = pm.register(object(), 'walk')
        config.addcommand('tally', 'walk')
        assert config.commands['tally'] is plugin

    def test_addcommand_unregistered(self, config):
        with pytest.raises(LookupError):
            config.addcommand('walk', object())

    def test_addcommand_duplicate(self, pm, config):
        plugin_a = pm.register(object(), 'walk')
        plugin_b = pm.register(object(), 'tally')
        config.addcommand('walk', plugin_a)
        with pytest.raises(KeyError):
            config.addcommand('walk', plugin_b)
        assert config.commands['walk'] is plugin_a

    def test_removecommand(self, pm, config):
        plugin = pm.register(object(), 'walk')
        config.addcommand('walk', plugin)
        config.removecommand('walk')
        assert 'walk' not in config.commands

    def test_remove_unregistered(self, config):
        with pytest.raises(KeyError):
            config.removecommand('walk')
