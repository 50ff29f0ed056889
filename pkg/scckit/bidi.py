"""Strong components by a forward and a backward pass.

The forward pass explores the graph depth-first and lists the
vertices in reverse postorder.  The backward pass then searches the
reversed graph, starting from each vertex of that list which is still
unassigned.  Each start vertex is the leader of its component, and
its search reaches exactly the unassigned vertices of the component.
The backward search need not be depth-first, by default it is a quick
search.

Components come out in topological order, the opposite of
:mod:`scckit.tarjan` and :mod:`scckit.cycle`.

The backward pass reuses the forward pass's visited marks as its
assignment array without clearing them: a forward-visited vertex is
marked -1 and becomes the positive id of its leader once assigned.
The quick search also reuses the engine's link array as its stack.

"""

import collections
import enum

import logbook

import scckit.errors
import scckit.explorespec
import scckit.memory
import scckit.pm
from scckit.components import OrderKind, SccResult, WithinOrder
from scckit.dfs import EngineKind, StopExploration
from scckit.graph import NONE, reverse_graph


log = logbook.Logger(__name__)


#: Forward mark of a visited but unassigned vertex.
VISITED = -1


class Backward(enum.Enum):
    """Search used by the backward pass."""

    QUICK = 'quick'
    DEPTH_FIRST = 'depth-first'

    def __str__(self):
        return self.value


class ForwardOrder:
    """Forward pass handlers: visited marks plus the postorder.

    Attributes:

    :mark: 0 for unvisited vertices, :data:`VISITED` otherwise.
    :order: Slots 1..n hold the vertices in postorder.
    :k: Number of postorder slots filled.

    """

    def __init__(self, n, stop_early=False, memory=scckit.memory.PLAIN):
        self.n = n
        self.stop_early = stop_early
        self.mark = memory.array('mark', n + 1)
        self.order = memory.array('order', n + 1)
        self.k = 0
        self.count = 0
        self.searches = 0

    @scckit.pm.hookimpl
    def start(self, n):
        mark = self.mark
        for v in range(1, n + 1):
            mark[v] = 0

    @scckit.pm.hookimpl
    def unvisited(self, v):
        return self.mark[v] == 0

    @scckit.pm.hookimpl
    def search_start(self, s):  # pylint: disable=unused-argument
        self.searches += 1

    @scckit.pm.hookimpl
    def previsit(self, v):
        self.mark[v] = VISITED
        self.count += 1
        if self.stop_early and self.count == self.n:
            raise StopExploration()

    @scckit.pm.hookimpl
    def postvisit(self, v):
        self.k += 1
        self.order[self.k] = v

    @scckit.pm.hookimpl
    def halt(self, path, arcs):  # pylint: disable=unused-argument
        """The rest of the postorder is the path, deepest first."""
        for v in reversed(path):
            self.k += 1
            self.order[self.k] = v


def forward_reverse_postorder(g, engine=EngineKind.A_STACK, start_order=None,
                              stop_early=False):
    """Return the vertices of g in reverse postorder."""
    fwd = _forward(g, engine, start_order, stop_early,
                   scckit.memory.PLAIN, None)
    return [fwd.order[k] for k in range(fwd.k, 0, -1)]


def _forward(g, engine, start_order, stop_early, memory, links):
    # pylint: disable=too-many-arguments
    fwd = ForwardOrder(g.n, stop_early, memory)
    skip = () if stop_early else ('halt',)
    stubs = scckit.pm.bindstubs(scckit.explorespec, fwd, skip=skip)
    scckit.dfs.run(g, stubs, engine, start_order, links=links, memory=memory)
    if fwd.k != g.n:
        raise scckit.errors.InternalInvariantError(
            'forward pass listed {} of {} vertices'.format(fwd.k, g.n))
    return fwd


class _BackwardAssign:
    """Depth-first backward pass handlers assigning leaders."""

    def __init__(self, mark):
        self.mark = mark
        self.leader = NONE
        self.components = []

    @scckit.pm.hookimpl
    def start(self, n):
        pass

    @scckit.pm.hookimpl
    def unvisited(self, v):
        return self.mark[v] == VISITED

    @scckit.pm.hookimpl
    def search_start(self, s):
        self.leader = s
        self.components.append([])

    @scckit.pm.hookimpl
    def previsit(self, v):
        self.mark[v] = self.leader
        self.components[-1].append(v)


def _backward_quick(rg, order, mark, link):
    n = rg.n
    first, tip, nxt = rg.first, rg.tip, rg.next
    components = []
    for k in range(n, 0, -1):
        s = order[k]
        state = mark[s]
        if state != VISITED:
            if state == 0:
                raise scckit.errors.InternalInvariantError(
                    'vertex {} missed by the forward pass'.format(s))
            continue
        members = []
        mark[s] = s
        link[s] = NONE
        top = s
        while top != NONE:
            v = top
            top = link[v]
            members.append(v)
            a = first[v]
            while a != NONE:
                w = tip[a]
                if mark[w] == VISITED:
                    mark[w] = s
                    link[w] = top
                    top = w
                a = nxt[a]
        components.append(members)
    return components


BidiRun = collections.namedtuple('BidiRun', ['result', 'searches'])


def run_bidirectional(g, g_rev=None, engine=EngineKind.A_STACK,
                      start_order=None, stop_early=False,
                      backward=Backward.QUICK, memory=scckit.memory.PLAIN):
    """Run both passes, also counting the searches started.

    :returns: :class:`BidiRun`; searches is the sum over both passes.

    """
    # pylint: disable=too-many-arguments
    engine = EngineKind(engine)
    backward = Backward(backward)
    if g_rev is None:
        g_rev = reverse_graph(g)
    n = g.n
    link = memory.array('link', n + 1)
    fwd = _forward(g, engine, start_order, stop_early, memory,
                   link if engine is EngineKind.A_STACK else None)
    mark = fwd.mark
    if backward is Backward.QUICK:
        components = _backward_quick(memory.graph(g_rev), fwd.order, mark,
                                     link)
    else:
        assign = _BackwardAssign(mark)
        rev_post = [fwd.order[k] for k in range(n, 0, -1)]
        stubs = scckit.pm.bindstubs(scckit.explorespec, assign)
        scckit.dfs.run(g_rev, stubs, engine, rev_post, memory=memory)
        components = assign.components
    leader = list(memory.peek(mark))
    leader[NONE] = NONE
    unassigned = [v for v in range(1, n + 1) if leader[v] <= 0]
    if unassigned:
        raise scckit.errors.InternalInvariantError(
            'vertices {} left unassigned'.format(unassigned[:10]))
    log.debug('Found {} strong components', len(components))
    result = SccResult(leader, components, OrderKind.TOPOLOGICAL,
                       WithinOrder.VISIT)
    return BidiRun(result, fwd.searches + len(components))


def scc_bidirectional(g, g_rev=None, engine=EngineKind.A_STACK,
                      start_order=None, stop_early=False,
                      backward=Backward.QUICK):
    """Find the strong components of g.

    :param g_rev: The reversed graph, built from g if not given.
    :param stop_early: End the forward pass once every vertex is
       previsited.
    :param backward: :class:`Backward` search to use.

    :returns: :class:`scckit.components.SccResult` in topological
       order, vertices of each component in backward visit order.

    """
    # pylint: disable=too-many-arguments
    return run_bidirectional(g, g_rev, engine, start_order, stop_early,
                             backward).result
