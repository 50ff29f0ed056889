"""The ``scc`` command: print the strong components of a graph."""

import sys

import logbook

import scckit.commands
import scckit.components
import scckit.counting
import scckit.errors
import scckit.pm
from scckit.commands import Algorithm
from scckit.dfs import EngineKind


log = logbook.Logger(__name__)


#: Access counter tag measuring each algorithm.
COUNTED_TAGS = {
    Algorithm.T: scckit.counting.AccessTag.TARJAN_A,
    Algorithm.C: scckit.counting.AccessTag.CYCLE_A,
    Algorithm.B: scckit.counting.AccessTag.BIDI,
}


class SccCommand(scckit.commands.Command):
    """Plugin providing the ``scc`` command."""

    NAME = 'scc'

    @scckit.pm.hookimpl
    def scckit_addcommand(self, subparsers):
        parser = subparsers.add_parser(
            self.NAME, help='Print the strong components of a graph')
        scckit.commands.add_algorithm(parser)
        scckit.commands.add_engine(parser)
        parser.add_argument(
            '--stop-early',
            action='store_true',
            help='Finish the last component without exploring it',
        )
        parser.add_argument(
            '--encode-leader-bits',
            action='store_true',
            help='Keep the leader bit in the low value (algorithm t)',
        )
        parser.add_argument(
            '--numeric-components',
            action='store_true',
            help='Record a completed vertex\'s leader in its low value as '
                 'leader + n, or leader + 2n + 1 with the leader bit '
                 'encoded (algorithm t)',
        )
        parser.add_argument(
            '--record-lowarcs',
            action='store_true',
            help='Record the arcs that set low values (algorithm t)',
        )
        parser.add_argument(
            '--counted',
            action='store_true',
            help='Count memory accesses, the report goes to stderr',
        )
        scckit.commands.add_input(parser)
        scckit.commands.add_output(parser)

    def run(self, config):
        args = config.args
        g = scckit.commands.read_graph(args.input)
        scckit.commands.warn_recursive(config, g, args.engine)
        if args.counted:
            scc = self._counted(config, g)
        else:
            scc = scckit.commands.find_components(
                g, args.algorithm, args.engine,
                stop_early=args.stop_early,
                encode_leader_bits=args.encode_leader_bits,
                numeric_components=args.numeric_components,
                record_lowarcs=args.record_lowarcs)
        log.info('Found {} components', len(scc.components))
        scckit.commands.write_text(args.output,
                                   scckit.components.format_components(scc))
        return 0

    @staticmethod
    def _counted(config, g):
        args = config.args
        if args.engine is not EngineKind.A_STACK:
            raise scckit.errors.UnsupportedError(
                '--counted needs --engine a, not {}'.format(args.engine))
        if args.numeric_components or args.record_lowarcs:
            raise scckit.errors.UnsupportedError(
                '--counted cannot be combined with --numeric-components '
                'or --record-lowarcs')
        if args.encode_leader_bits and args.algorithm is not Algorithm.T:
            raise scckit.errors.UnsupportedError(
                'low value options need algorithm t')
        scc, report = scckit.counting.counted_run(
            COUNTED_TAGS[args.algorithm], g, stop_early=args.stop_early)
        print(report.header(), file=sys.stderr)
        print(report.csv(), file=sys.stderr)
        if not report.within_bound(config.settings):
            log.warning('{} made {} accesses, above its bound of {}',
                        report.tag, report.total, report.bound)
        return scc
