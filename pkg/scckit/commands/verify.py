"""The ``verify`` command: check an ``scc`` output against a graph."""

import sys

import logbook

import scckit.commands
import scckit.components
import scckit.extensions
import scckit.pm


log = logbook.Logger(__name__)


class VerifyCommand(scckit.commands.Command):
    """Plugin providing the ``verify`` command.

    Builds spanning tree certificates inside every claimed component
    and checks them together with the emission order.  Prints
    ``ACCEPT`` and exits 0, or prints ``REJECT`` and the reason on
    stderr and exits 3.
    """

    NAME = 'verify'
    REJECTED = 3

    @scckit.pm.hookimpl
    def scckit_addcommand(self, subparsers):
        parser = subparsers.add_parser(
            self.NAME,
            help='Check claimed strong components of a graph.  Any member '
                 'may be named leader, which one is not checked')
        parser.add_argument(
            '--scc',
            metavar='PATH',
            required=True,
            help='Components as printed by the scc command',
        )
        scckit.commands.add_input(parser)

    def run(self, config):
        args = config.args
        g = scckit.commands.read_graph(args.input)
        scc = scckit.components.parse_components(
            scckit.commands.read_text(args.scc), g.n)
        in_trees, out_trees = scckit.extensions.certify(g, scc)
        verdict = scckit.extensions.verify_scc(g, scc, in_trees, out_trees)
        if not verdict.accepted:
            log.info('Rejected {} components of {}',
                     len(scc.components), args.scc)
            print('REJECT: {}'.format(verdict.reason), file=sys.stderr)
            return self.REJECTED
        print('ACCEPT')
        return 0
