"""Storage for per-vertex and per-arc working fields.

The algorithms allocate their working arrays through a memory object
and read the graph's arrays through it.  :data:`PLAIN` hands out
ordinary lists and the graph itself; the counting executor swaps in
:class:`scckit.counting.CountingMemory`, which tallies every access,
without the algorithms changing.

"""


class Memory:
    """Plain storage: lists and the graph's own tuples."""

    def array(self, name, size, fill=0):  # pylint: disable=unused-argument
        """Return a fresh array of ``size`` slots set to ``fill``.

        :param name: Name of the field, used only for reporting.
        """
        return [fill] * size

    def graph(self, g):
        """Return the view of g the algorithms read arcs through."""
        return g

    def peek(self, array):
        """Return array contents for building results, uncounted."""
        return array


PLAIN = Memory()
