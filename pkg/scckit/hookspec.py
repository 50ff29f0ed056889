"""Hook specifications for scckit command line plugins."""

# pylint: disable=unused-argument


import scckit.pm


@scckit.pm.hookdef(firstresult=True)
def scckit_main(pluginmanager, argv):
    """Invoke the main program.

    This hook is responsible for driving all other hooks.

    Return the exit status: 0 for success, 1 or greater for failure.

    """


@scckit.pm.hookdef
def scckit_plugin_registered(pluginmanager, name):
    """Called when a plugin is registered.

    Plugins can add new hooks via ``pluginmanager.addhooks(module)``
    here, before any other hooks are called.

    """


@scckit.pm.hookdef(firstresult=True)
def scckit_cmdline_parse(pluginmanager, argv):
    """Return the initialised Config after parsing the arguments.

    This hook is responsible for calling the scckit_addoption and
    scckit_addcommand hooks.
    """


@scckit.pm.hookdef
def scckit_addoption(parser):
    """Register global argparse options on the main parser."""


@scckit.pm.hookdef
def scckit_addcommand(subparsers):
    """Register a sub-command.

    ``subparsers`` is the object returned by the main parser's
    ``add_subparsers()``; call its ``add_parser()`` once per command.

    """


@scckit.pm.hookdef
def scckit_configure(config):
    """Perform extra configuration.

    Called after the command line is parsed and the settings are
    loaded.  Command plugins register themselves with
    ``config.addcommand()`` here.

    """


@scckit.pm.hookdef
def scckit_unconfigure(config):
    """Called before the program exits, also after a failure."""


@scckit.pm.hookdef(firstresult=True)
def scckit_command(config):
    """Run the sub-command selected on the command line.

    Implementations return None for commands they do not own and the
    exit status otherwise.

    """
