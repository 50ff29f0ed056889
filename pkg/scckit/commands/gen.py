"""The ``gen`` command: print a generated graph."""

import scckit.commands
import scckit.graph
import scckit.pm
import scckit.testkit
from scckit.testkit import Family


class GenCommand(scckit.commands.Command):
    """Plugin providing the ``gen`` command."""

    NAME = 'gen'

    @scckit.pm.hookimpl
    def scckit_addcommand(self, subparsers):
        parser = subparsers.add_parser(
            self.NAME, help='Print a generated graph')
        parser.add_argument(
            '--family',
            type=Family,
            choices=list(Family),
            default=Family.GNM_RANDOM,
            help='Graph family (default gnm)',
        )
        parser.add_argument('-n', type=int, default=10,
                            help='Number of vertices (default 10)')
        parser.add_argument('-m', type=int, default=0,
                            help='Number of arcs, for the families using it')
        parser.add_argument('--seed', type=int, default=0,
                            help='Random seed (default 0)')
        parser.add_argument('--cycles', type=int, default=2,
                            help='Number of cycles of cycle-chain (default 2)')
        scckit.commands.add_output(parser)

    def run(self, config):
        args = config.args
        spec = scckit.testkit.GenSpec(args.family, args.n, args.m,
                                      args.seed, args.cycles)
        g = scckit.testkit.generate(spec)
        scckit.commands.write_text(args.output,
                                   scckit.graph.serialize_graph(g))
        return 0
