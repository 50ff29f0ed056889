"""Core scckit application plugin.

Provides the ``scckit_main()`` hook, which drives the application by
calling all other hooks: it parses the command line, sets up logging,
loads the settings, configures the plugins and runs the selected
sub-command.

The ``scckit_main()`` hook itself is called by :mod:`scckit.__main__`
which creates the plugin manager and registers the plugins.

"""

import argparse
import contextlib
import importlib.metadata
import sys

import logbook
import logbook.compat

import scckit.errors
import scckit.pm
import scckit.settings


log = logbook.Logger(__name__)


@scckit.pm.hookimpl
def scckit_main(pluginmanager, argv):
    """Run scckit, returning the exit status."""
    config = pluginmanager.hooks.scckit_cmdline_parse(
        pluginmanager=pluginmanager, argv=argv)
    handler = logbook.StderrHandler(level=config.args.log_level)
    with handler.applicationbound():
        logbook.compat.redirect_logging()
        try:
            with contextlib.ExitStack() as stack:
                config.settings = scckit.settings.load(config.args.config)
                stack.callback(pluginmanager.hooks.scckit_unconfigure,
                               config=config)
                pluginmanager.hooks.scckit_configure(config=config)
                status = pluginmanager.hooks.scckit_command(config=config)
        except scckit.errors.ScckitError as err:
            log.error('{}: {}', err.code, err)
            return err.exit_status
        except RecursionError:
            log.error('Recursion limit reached, use --engine a for deep '
                      'graphs')
            return 1
    if status is None:
        log.error('No plugin handles command {}', config.args.command)
        return 1
    return status


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser exiting with status 1 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, '{}: error: {}\n'.format(self.prog, message))


@scckit.pm.hookimpl
def scckit_cmdline_parse(pluginmanager, argv):
    """Parse the command line arguments.

    Returns an instantiated Config object.
    """
    parser = ArgumentParser(
        prog='scckit',
        description='Strong components of directed graphs',
    )
    pluginmanager.hooks.scckit_addoption(parser=parser)
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True
    pluginmanager.hooks.scckit_addcommand(subparsers=subparsers)
    args = parser.parse_args(argv)
    return Config(pluginmanager, args)


class LogLevelAction(argparse.Action):
    """Store a logbook level given by name or number."""

    def __call__(self, parser, namespace, values, option_string=None):
        try:
            level = logbook.lookup_level(
                int(values) if values.isdigit() else values.upper())
        except LookupError:
            parser.error('invalid log level: {!r}'.format(values))
        setattr(namespace, self.dest, level)


def _version():
    try:
        return importlib.metadata.version('scckit')
    except importlib.metadata.PackageNotFoundError:
        return 'unknown'


@scckit.pm.hookimpl
def scckit_addoption(parser):
    """Add the global command line options."""
    parser.add_argument(
        '--version',
        action='version',
        version='%(prog)s {}'.format(_version()),
    )
    parser.add_argument(
        '-l', '--log-level',
        default=logbook.WARNING,
        help='Log verbosity: debug, info, warning, error, critical; or 0-6',
        action=LogLevelAction,
    )
    parser.add_argument(
        '--trace',
        action='store_true',
        help='Trace the plugin manager actions',
    )
    parser.add_argument(
        '--config',
        metavar='PATH',
        help='YAML file overriding the built-in settings',
    )


class Config:
    """The main configuration instance.

    Attributes:

    :pluginmanager: The PluginManager instance.
    :args: The argparse Namespace from parsing the command line.
    :settings: The :class:`scckit.settings.Settings`, the built-in
       defaults until ``scckit_main`` loads the ``--config`` file.
    :commands: Dict of sub-command names mapped to the plugin
       providing them.

    """

    def __init__(self, pluginmanager, args):
        self.args = args
        self.pluginmanager = pluginmanager
        self.settings = scckit.settings.default()
        self.commands = {}

    def addcommand(self, name, plugin):
        """Register a plugin as providing a sub-command.

        :param plugin: Plugin name, object or
           :class:`scckit.pm.Plugin`; it must already be registered.

        :raises KeyError: If another plugin already provides the
           command.

        """
        plugin = self.pluginmanager.getplugin(plugin)
        if name in self.commands:
            raise KeyError('Command already registered: {}'.format(name))
        self.commands[name] = plugin

    def removecommand(self, name):
        """Unregister a sub-command, KeyError if unknown."""
        if name not in self.commands:
            raise KeyError('Command not registered: {}'.format(name))
        del self.commands[name]
