"""The ``condense`` command: contract every strong component."""

import scckit.commands
import scckit.extensions
import scckit.pm


class CondenseCommand(scckit.commands.Command):
    """Plugin providing the ``condense`` command.

    The condensation is printed as an edge list, its vertex k being the
    k-th component in reverse topological order.  The ``k leader``
    lines go to the ``--leaders`` file, or are appended as comments.
    """

    NAME = 'condense'

    @scckit.pm.hookimpl
    def scckit_addcommand(self, subparsers):
        parser = subparsers.add_parser(
            self.NAME, help='Print the acyclic graph of the components')
        scckit.commands.add_algorithm(parser)
        parser.add_argument(
            '--leaders',
            metavar='PATH',
            help='Write the "component leader" lines to this file',
        )
        scckit.commands.add_input(parser)
        scckit.commands.add_output(parser)

    def run(self, config):
        args = config.args
        g = scckit.commands.read_graph(args.input)
        scc = scckit.commands.find_components(g, args.algorithm)
        cond = scckit.extensions.condense(g, scc)
        text, sidecar = scckit.extensions.serialize_condensation(cond)
        if args.leaders:
            scckit.commands.write_text(args.leaders, sidecar)
        else:
            text += '# comp leader\n'
            text += ''.join('# ' + line for line in sidecar.splitlines(True))
        scckit.commands.write_text(args.output, text)
        return 0
