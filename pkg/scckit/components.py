"""Strong component results and their text format.

Every algorithm returns an :class:`SccResult`.  The text format
written by the ``scc`` command is a header naming the emission order
followed by one line per component, leader first::

    order=reverse-topological
    1: 3 2 1

"""

import enum

import scckit.errors
from scckit.graph import NONE


class OrderKind(enum.Enum):
    """Order in which components are emitted.

    In reverse topological order no arc leads from a component to a
    later one.
    """

    REVERSE_TOPOLOGICAL = 'reverse-topological'
    TOPOLOGICAL = 'topological'

    def __str__(self):
        return self.value

    def flipped(self):
        if self is OrderKind.TOPOLOGICAL:
            return OrderKind.REVERSE_TOPOLOGICAL
        return OrderKind.TOPOLOGICAL


class WithinOrder(enum.Enum):
    """Order of the vertices inside each component list."""

    POSTORDER = 'postorder'
    PREORDER = 'preorder'
    VISIT = 'visit'
    UNSPECIFIED = 'unspecified'


class SccResult:
    """A partition of the vertices into strong components.

    Attributes:

    :leader: List indexed by vertex giving the leader of its
       component, slot 0 unused.
    :components: Component vertex lists in emission order.
    :order_kind: :class:`OrderKind` of the emission order.
    :within_order: :class:`WithinOrder` of each component list.
    :lowarcs: List indexed by vertex with the low arc of each
       follower, NONE for leaders; None if not recorded.
    :tree_arcs: List of :class:`scckit.dfs.TreeArc` in advance order;
       None if not recorded.

    """

    def __init__(self, leader, components, order_kind, within_order,
                 lowarcs=None, tree_arcs=None):
        # pylint: disable=too-many-arguments
        self.leader = leader
        self.components = components
        self.order_kind = order_kind
        self.within_order = within_order
        self.lowarcs = lowarcs
        self.tree_arcs = tree_arcs

    def __repr__(self):
        return '<SccResult {} components, {}>'.format(
            len(self.components), self.order_kind)

    @property
    def n(self):
        return len(self.leader) - 1

    def leaders(self):
        """Return the component leaders in emission order."""
        return [self.leader[members[0]] for members in self.components]

    def partition(self):
        """Return the components as a frozenset of frozensets."""
        return frozenset(frozenset(members) for members in self.components)

    def index(self):
        """Return a list mapping every vertex to its emission index."""
        index = [None] * (self.n + 1)
        for k, members in enumerate(self.components):
            for v in members:
                index[v] = k
        return index

    def reversed(self):
        """Return the same partition with the emission order reversed."""
        return SccResult(self.leader, self.components[::-1],
                         self.order_kind.flipped(), self.within_order,
                         self.lowarcs, self.tree_arcs)


def check_partition(n, scc):
    """Check that scc partitions 1..n with consistent leaders.

    :raises scckit.errors.InvalidPartitionError: Naming the first
       problem found.

    """
    if len(scc.leader) != n + 1:
        raise scckit.errors.InvalidPartitionError(
            'leader map covers {} vertices, graph has {}'.format(
                len(scc.leader) - 1, n))
    seen = [False] * (n + 1)
    for members in scc.components:
        if not members:
            raise scckit.errors.InvalidPartitionError('empty component')
        leader = scc.leader[members[0]]
        if leader not in members:
            raise scckit.errors.InvalidPartitionError(
                'leader {} is not in its component'.format(leader))
        for v in members:
            if not 1 <= v <= n:
                raise scckit.errors.InvalidPartitionError(
                    'vertex {} outside 1..{}'.format(v, n))
            if seen[v]:
                raise scckit.errors.InvalidPartitionError(
                    'vertex {} is in more than one component'.format(v))
            seen[v] = True
            if scc.leader[v] != leader:
                raise scckit.errors.InvalidPartitionError(
                    'vertex {} has leader {}, its component has {}'.format(
                        v, scc.leader[v], leader))
    missing = [v for v in range(1, n + 1) if not seen[v]]
    if missing:
        raise scckit.errors.InvalidPartitionError(
            'vertex {} is in no component'.format(missing[0]))


def format_components(scc):
    """Return the text form of scc."""
    lines = ['order={}'.format(scc.order_kind)]
    for members in scc.components:
        lines.append('{}: {}'.format(
            scc.leader[members[0]], ' '.join(map(str, members))))
    return '\n'.join(lines) + '\n'


def parse_components(text, n):
    """Parse the text form into an :class:`SccResult` over 1..n.

    The result is not checked to be a partition, see
    :func:`check_partition`.

    :raises scckit.errors.ParseError: For malformed lines.

    """
    order_kind = None
    components = []
    leader = [NONE] * (n + 1)
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if order_kind is None:
            key, _, value = line.partition('=')
            try:
                if key != 'order':
                    raise ValueError(key)
                order_kind = OrderKind(value)
            except ValueError:
                raise scckit.errors.ParseError(
                    'expected an "order=" header, got {!r}'.format(line),
                    lineno) from None
            continue
        head, sep, rest = line.partition(':')
        try:
            if not sep:
                raise ValueError(line)
            lead = int(head)
            members = [int(field) for field in rest.split()]
        except ValueError:
            raise scckit.errors.ParseError(
                'expected "leader: vertices", got {!r}'.format(line),
                lineno) from None
        for v in members:
            if not 1 <= v <= n:
                raise scckit.errors.InvalidPartitionError(
                    'line {}: vertex {} outside 1..{}'.format(lineno, v, n))
            leader[v] = lead
        components.append(members)
    if order_kind is None:
        raise scckit.errors.ParseError('missing "order=" header line')
    return SccResult(leader, components, order_kind, WithinOrder.UNSPECIFIED)
