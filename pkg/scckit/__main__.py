"""Command line entrypoint.

Builds the plugin manager from :data:`BUILTIN_PLUGIN_NAMES` and lets
the ``scckit_main()`` hook, provided by :mod:`scckit.core`, do the
rest.
"""

import functools
import importlib
import sys

import logbook

import scckit.hookspec
import scckit.pm


#: Registered in this order, :mod:`scckit.core` first.
BUILTIN_PLUGIN_NAMES = [
    'scckit.core',
    'scckit.commands.scc:SccCommand',
    'scckit.commands.condense:CondenseCommand',
    'scckit.commands.verify:VerifyCommand',
    'scckit.commands.gen:GenCommand',
    'scckit.commands.count:CountCommand',
    'scckit.commands.bench:BenchCommand',
]


log = logbook.Logger('scckit.bootstrap')


def load_plugin(plugin_name):
    """Import a plugin named as ``module`` or ``module:Class``.

    A class is instantiated without arguments and registered as
    ``module.Class``.

    :returns: Tuple of the registration name and the plugin object.

    :raises ImportError: If the module cannot be imported, lacks the
       class or the class cannot be instantiated.

    """
    modname, _, clsname = plugin_name.partition(':')
    try:
        mod = importlib.import_module(modname)
    except Exception as err:
        raise ImportError(
            'cannot import plugin module {}: {}'.format(modname, err)) from err
    if not clsname:
        return mod.__name__, mod
    cls = getattr(mod, clsname, None)
    if cls is None:
        raise ImportError('{} has no plugin class {}'.format(modname, clsname))
    try:
        obj = cls()
    except Exception as err:
        raise ImportError(
            'cannot instantiate {}: {}'.format(plugin_name, err)) from err
    return '{}.{}'.format(mod.__name__, clsname), obj


def main(argv=None, plugins=None):
    """Run the ``scckit`` tool and return its exit status.

    :param argv: Arguments without the program name, defaults to
       ``sys.argv[1:]``.
    :param plugins: Plugin names for :func:`load_plugin`, defaults to
       :data:`BUILTIN_PLUGIN_NAMES`.

    A plugin failing to load or register is reported on stderr and
    skipped, the remaining ones are still registered.

    """
    argv = sys.argv[1:] if argv is None else argv
    plugins = BUILTIN_PLUGIN_NAMES if plugins is None else plugins
    pluginmanager = scckit.pm.PluginManager(scckit.hookspec)
    if '--trace' in argv:
        pluginmanager.tracer_cb = trace
    pluginmanager.register_callback = functools.partial(
        plugin_registered_cb, pluginmanager)
    for plugin_name in plugins:
        try:
            name, obj = load_plugin(plugin_name)
            pluginmanager.register(obj, name=name)
        except Exception as err:       # pylint: disable=broad-except
            print('Skipping plugin {}: {}'.format(plugin_name, err),
                  file=sys.stderr)
    return pluginmanager.hooks.scckit_main(pluginmanager=pluginmanager,
                                           argv=argv)


def plugin_registered_cb(pluginmanager, plugin):
    """Announce a newly registered plugin to the other plugins."""
    try:
        pluginmanager.hooks.scckit_plugin_registered(
            pluginmanager=pluginmanager, name=plugin.name)
    except Exception:           # pylint: disable=broad-except
        log.exception('scckit_plugin_registered failed for {}', plugin.name)


def trace(msg):
    """Write a plugin manager trace message to stderr."""
    print('TRACE:', msg, file=sys.stderr)


if __name__ == '__main__':      # pragma: no cover
    sys.exit(main())
