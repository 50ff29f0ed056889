"""The ``count`` command: memory access reports for a graph."""

import argparse

import logbook

import scckit.commands
import scckit.counting
import scckit.errors
import scckit.pm
from scckit.counting import AccessReport, AccessTag


log = logbook.Logger(__name__)


def access_tag(text):
    """Argparse type for an access counter tag."""
    try:
        return scckit.counting.lookup_tag(text)
    except scckit.errors.UnknownTagError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


class CountCommand(scckit.commands.Command):
    """Plugin providing the ``count`` command.

    Prints a CSV header and one :class:`scckit.counting.AccessReport`
    record per measured implementation.
    """

    NAME = 'count'

    @scckit.pm.hookimpl
    def scckit_addcommand(self, subparsers):
        parser = subparsers.add_parser(
            self.NAME, help='Count the memory accesses of the algorithms')
        parser.add_argument(
            '--tag',
            action='append',
            type=access_tag,
            help='Implementation to measure, repeatable (default all): {}'
            .format(', '.join(str(tag) for tag in AccessTag)),
        )
        parser.add_argument(
            '--stop-early',
            action='store_true',
            help='Measure the component algorithms with early stopping',
        )
        scckit.commands.add_input(parser)
        scckit.commands.add_output(parser)

    def run(self, config):
        args = config.args
        g = scckit.commands.read_graph(args.input)
        lines = [AccessReport.header()]
        for tag in args.tag or list(AccessTag):
            _, report = scckit.counting.counted_run(tag, g, args.stop_early)
            if not report.within_bound(config.settings):
                log.warning('{} made {} accesses, above its bound of {}',
                            tag, report.total, report.bound)
            lines.append(report.csv())
        scckit.commands.write_text(args.output, '\n'.join(lines) + '\n')
        return 0
