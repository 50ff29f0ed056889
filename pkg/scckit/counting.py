"""Memory access counting executor.

Runs an algorithm with every read and write of a per-vertex or
per-arc field tallied, and compares the total with a linear bound
``c_m * m + c_n * n``.  Locals count as registers and are free.  The
values each measured implementation keeps in registers:

============  ==============================================================
tag           registers
============  ==============================================================
V_STACK       v, a, w, the stack top
A_STACK       v, a, w, the top arc
QUICK         v, a, w, the stack top
TARJAN_A      v, a, w, top arc, F top, time, count, low and leader bit of v,
              low of the search start
CYCLE_A       v, a, w, top arc, F top, L top and its pre, time, count, |L|
BIDI          v, a, w, top arc, postorder count, stack top, current leader
============  ==============================================================

Every arc costs three accesses per search over it, reading its tip,
the field of the tip that tells whether it is visited and its next
link.  Initialisation of per-vertex fields is counted; allocation is
not.  V_STACK is measured in its push-every-advance form.  TARJAN_A
is measured with the leader bit encoded in low.

"""

import collections
import enum

import logbook

import scckit.bidi
import scckit.cycle
import scckit.dfs
import scckit.errors
import scckit.explorespec
import scckit.memory
import scckit.pm
import scckit.settings
import scckit.tarjan
from scckit.graph import reverse_graph


log = logbook.Logger(__name__)


class AccessTag(enum.Enum):
    """Measured implementations."""

    V_STACK = 'V_STACK'
    A_STACK = 'A_STACK'
    QUICK = 'QUICK'
    TARJAN_A = 'TARJAN_A'
    CYCLE_A = 'CYCLE_A'
    BIDI = 'BIDI'

    def __str__(self):
        return self.value


#: Coefficients ``(c_m, c_n)`` of the access bound per tag.
BOUNDS = {
    AccessTag.V_STACK: (3, 10),
    AccessTag.A_STACK: (3, 9),
    AccessTag.QUICK: (3, 5),
    AccessTag.TARJAN_A: (3, 16),
    AccessTag.CYCLE_A: (3, 18),
    AccessTag.BIDI: (6, 14),
}


def lookup_tag(tag):
    """Return the :class:`AccessTag` for a tag or its name.

    :raises scckit.errors.UnknownTagError: For anything else.

    """
    if isinstance(tag, AccessTag):
        return tag
    try:
        return AccessTag(str(tag).upper())
    except ValueError:
        raise scckit.errors.UnknownTagError(
            'no access bound for {!r}'.format(tag)) from None


def bound(tag, m, n):
    """Return the access bound of tag for m arcs and n vertices."""
    c_m, c_n = BOUNDS[lookup_tag(tag)]
    return c_m * m + c_n * n


class CountedArray:
    """A list wrapper counting reads and writes."""

    __slots__ = ('name', 'data', 'reads', 'writes')

    def __init__(self, name, data):
        self.name = name
        self.data = data
        self.reads = 0
        self.writes = 0

    def __len__(self):
        return len(self.data)

    def __getitem__(self, index):
        self.reads += 1
        return self.data[index]

    def __setitem__(self, index, value):
        self.writes += 1
        self.data[index] = value

    def __repr__(self):
        return '<CountedArray {} reads={} writes={}>'.format(
            self.name, self.reads, self.writes)


class CountedGraph:
    """Graph view whose first, tip and next arrays are counted."""

    def __init__(self, g, memory):
        self.n = g.n
        self.m = g.m
        self.first = memory.track(CountedArray('first', g.first))
        self.tip = memory.track(CountedArray('tip', g.tip))
        self.next = memory.track(CountedArray('next', g.next))


Tally = collections.namedtuple('Tally', ['name', 'reads', 'writes'])


class CountingMemory(scckit.memory.Memory):
    """Memory handing out counted arrays."""

    def __init__(self):
        self.arrays = []

    def track(self, array):
        self.arrays.append(array)
        return array

    def array(self, name, size, fill=0):
        return self.track(CountedArray(name, [fill] * size))

    def graph(self, g):
        return CountedGraph(g, self)

    def peek(self, array):
        if isinstance(array, CountedArray):
            return array.data
        return array

    @property
    def reads(self):
        return sum(array.reads for array in self.arrays)

    @property
    def writes(self):
        return sum(array.writes for array in self.arrays)

    def tallies(self):
        """Return a :class:`Tally` per array name, summed over arrays."""
        reads = collections.Counter()
        writes = collections.Counter()
        for array in self.arrays:
            reads[array.name] += array.reads
            writes[array.name] += array.writes
        return [Tally(name, reads[name], writes[name])
                for name in sorted(set(reads) | set(writes))]


class AccessReport(collections.namedtuple(
        'AccessReport',
        ['tag', 'n', 'm', 'starts', 'components', 'reads', 'writes'])):
    """Access counts of one counted run."""

    __slots__ = ()

    FIELDS = ('tag', 'n', 'm', 'starts', 'components', 'reads', 'writes',
              'total', 'bound')

    @property
    def total(self):
        return self.reads + self.writes

    @property
    def bound(self):
        return bound(self.tag, self.m, self.n)

    @classmethod
    def header(cls):
        return ','.join(cls.FIELDS)

    def csv(self):
        return ','.join(str(getattr(self, field)) for field in self.FIELDS)

    def slack(self, settings=None):
        """Allowance on top of the bound for searches and components."""
        settings = settings or scckit.settings.default()
        return (settings.count.slack_per_search
                * (self.starts + self.components)
                + settings.count.slack_constant)

    def within_bound(self, settings=None):
        return self.total <= self.bound + self.slack(settings)


#: Preorder and postorder of a counted exploration.
ExplorationOrder = collections.namedtuple('ExplorationOrder',
                                          ['preorder', 'postorder'])


def counted_run(tag, g, stop_early=False):
    """Run the implementation measured under tag with counted memory.

    :param stop_early: Applies to TARJAN_A, CYCLE_A and BIDI.

    :returns: ``(output, AccessReport)``.  The output is an
       :class:`scckit.components.SccResult` for the component
       algorithms, an :class:`ExplorationOrder` for the two engines
       and the visit order for QUICK.

    :raises scckit.errors.UnknownTagError: For an unknown tag.

    """
    tag = lookup_tag(tag)
    memory = CountingMemory()
    components = 0
    if tag in (AccessTag.V_STACK, AccessTag.A_STACK):
        marks = scckit.dfs.VisitMarks(memory)
        stubs = scckit.pm.bindstubs(scckit.explorespec, marks)
        if tag is AccessTag.V_STACK:
            scckit.dfs.run(g, stubs, scckit.dfs.EngineKind.V_STACK,
                           basic=True, memory=memory)
        else:
            scckit.dfs.run(g, stubs, scckit.dfs.EngineKind.A_STACK,
                           memory=memory)
        output = ExplorationOrder(marks.preorder, marks.postorder)
        starts = marks.searches
    elif tag is AccessTag.QUICK:
        output, starts = scckit.dfs.run_quick_search(g, memory=memory)
    else:
        if tag is AccessTag.TARJAN_A:
            opts = scckit.tarjan.TarjanOptions(encode_leader_bits=True,
                                               stop_early=stop_early)
            output, starts = scckit.tarjan.run_arcstack(g, opts, memory)
        elif tag is AccessTag.CYCLE_A:
            output, starts = scckit.cycle.run_arcstack(g, stop_early, memory)
        else:
            output, starts = scckit.bidi.run_bidirectional(
                g, reverse_graph(g), stop_early=stop_early, memory=memory)
        components = len(output.components)
    report = AccessReport(tag, g.n, g.m, starts, components,
                          memory.reads, memory.writes)
    for tally in memory.tallies():
        log.debug('{} {}: {} reads, {} writes',
                  tag, tally.name, tally.reads, tally.writes)
    return output, report
