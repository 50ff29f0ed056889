"""Sub-command plugins of the ``scckit`` command line tool.

Each module holds one plugin class adding a sub-parser in
``scckit_addcommand`` and running it in ``scckit_command``.  This
module has the helpers they share.

"""

import enum
import sys

import logbook

import scckit.bidi
import scckit.cycle
import scckit.errors
import scckit.graph
import scckit.pm
import scckit.tarjan
from scckit.dfs import EngineKind


log = logbook.Logger(__name__)


class Algorithm(enum.Enum):
    """Strong component algorithms selectable with ``-a``."""

    T = 't'
    C = 'c'
    B = 'b'

    def __str__(self):
        return self.value


def add_input(parser):
    parser.add_argument(
        'input',
        nargs='?',
        default='-',
        help='Edge-list file, "-" for standard input (default)',
    )


def add_output(parser):
    parser.add_argument(
        '-o', '--output',
        default='-',
        help='Output file, "-" for standard output (default)',
    )


def add_algorithm(parser):
    parser.add_argument(
        '-a', '--algorithm',
        type=Algorithm,
        choices=list(Algorithm),
        default=Algorithm.T,
        help='t: low values, c: cycle merging, b: two passes (default t)',
    )


def add_engine(parser):
    parser.add_argument(
        '--engine',
        type=EngineKind,
        choices=list(EngineKind),
        default=EngineKind.A_STACK,
        help='Depth-first engine: recursive, v or a (default a)',
    )


def read_text(path):
    """Return the text of a file, or of standard input for ``-``.

    :raises scckit.errors.UsageError: If the file cannot be read.

    """
    if path == '-':
        return sys.stdin.read()
    try:
        with open(path) as fp:
            return fp.read()
    except OSError as err:
        raise scckit.errors.UsageError(
            'cannot read {}: {}'.format(path, err)) from err


def read_graph(path):
    """Parse the edge-list file at path."""
    g = scckit.graph.parse_graph(read_text(path))
    log.info('Loaded graph with {} vertices and {} arcs from {}',
             g.n, g.m, path)
    return g


def write_text(path, text):
    """Write text to a file, or to standard output for ``-``."""
    if path == '-':
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(path, 'w') as fp:
            fp.write(text)
    except OSError as err:
        raise scckit.errors.UsageError(
            'cannot write {}: {}'.format(path, err)) from err


def warn_recursive(config, g, engine):
    """Warn when the recursive engine meets a large graph."""
    limit = config.settings.cli.recursive_warn_vertices
    if engine is EngineKind.RECURSIVE and g.n > limit:
        log.warning('Recursive engine on {} vertices may exceed the '
                    'recursion limit', g.n)


def find_components(g, algorithm, engine=EngineKind.A_STACK, *,
                    stop_early=False, encode_leader_bits=False,
                    numeric_components=False, record_lowarcs=False):
    """Run the chosen algorithm on g and return its SccResult.

    :raises scckit.errors.UnsupportedError: If a flag only algorithm
       ``t`` has is set for another algorithm.

    """
    algorithm = Algorithm(algorithm)
    if algorithm is Algorithm.T:
        opts = scckit.tarjan.TarjanOptions(
            engine=engine, encode_leader_bits=encode_leader_bits,
            stop_early=stop_early, numeric_components=numeric_components,
            record_lowarcs=record_lowarcs)
        return scckit.tarjan.scc_tarjan(g, opts)
    if encode_leader_bits or numeric_components or record_lowarcs:
        raise scckit.errors.UnsupportedError(
            'low value options need algorithm t')
    if algorithm is Algorithm.C:
        opts = scckit.cycle.CycleOptions(engine=engine, stop_early=stop_early)
        return scckit.cycle.scc_cycle(g, opts)
    return scckit.bidi.scc_bidirectional(g, engine=engine,
                                         stop_early=stop_early)


class Command:
    """Mixin registering a plugin as the provider of one sub-command.

    Subclasses set :attr:`NAME`, add their sub-parser in
    ``scckit_addcommand`` and implement :meth:`run`.

    """

    NAME = None

    @scckit.pm.hookimpl
    def scckit_configure(self, config):
        config.addcommand(self.NAME, self)

    @scckit.pm.hookimpl
    def scckit_unconfigure(self, config):
        if self.NAME in config.commands:
            config.removecommand(self.NAME)

    @scckit.pm.hookimpl
    def scckit_command(self, config):
        """Run the command if it is this plugin's, else return None."""
        if config.args.command != self.NAME:
            return None
        status = self.run(config)
        log.info('Command {} finished with status {}', self.NAME, status)
        return status

    def run(self, config):
        """Run the command and return its exit status."""
        raise NotImplementedError
