"""Depth-first exploration engines.

Three interchangeable engines explore a graph and fire the handlers
defined in :mod:`scckit.explorespec`:

``RECURSIVE``
   One Python call per tree arc.  Simple, but limited by the
   interpreter's recursion limit so only fit for shallow graphs.

``V_STACK``
   A loop over the current arc with an endogenous stack of path
   vertices.  Each vertex keeps the arc it is scanning in an ``arc``
   slot.  By default a vertex is pushed only when it first advances
   and popped when it is finished; ``basic=True`` pushes on every
   advance and pops on every return instead.

``A_STACK``
   A loop over the current arc with an endogenous stack of tree arcs.
   The ``link`` slot of a path vertex names the tree arc entering its
   parent, and the arc entering v is popped just before v is
   postvisited, which frees v's slot from then on.  Algorithms can
   hand in the link array to reuse those freed slots.

All engines take arcs in out-list order and start searches at the
unvisited vertices of the start order, so for the same graph, handlers
and start order they fire identical event sequences.

"""

import collections
import enum

import logbook

import scckit.errors
import scckit.explorespec
import scckit.memory
import scckit.pm
from scckit.graph import NONE


log = logbook.Logger(__name__)


class EngineKind(enum.Enum):
    """Depth-first exploration engine."""

    RECURSIVE = 'recursive'
    V_STACK = 'v'
    A_STACK = 'a'

    def __str__(self):
        return self.value


class EventKind(enum.Enum):
    """Kinds of recorded exploration events."""

    SEARCH_START = 'search-start'
    PREVISIT = 'previsit'
    POSTVISIT = 'postvisit'
    TREE_ADVANCE = 'tree-advance'
    NONTREE_TRAVERSE = 'nontree-traverse'
    TREE_RETREAT = 'tree-retreat'
    RETREAT = 'retreat'


class ArcClass(enum.Enum):
    """Arc classes relative to a depth-first forest."""

    TREE = 'tree'
    BACK = 'back'
    FORWARD = 'forward'
    CROSS = 'cross'
    LOOP = 'loop'


#: One recorded event; ``a`` and ``w`` are NONE for vertex events.
Event = collections.namedtuple('Event', ['kind', 'v', 'a', 'w'])

#: Previsit and postvisit times, lists indexed by vertex, plus the
#: frozenset of tree arcs of the same exploration.
TimeStamps = collections.namedtuple('TimeStamps', ['pre', 'post', 'tree_arcs'])

TreeArc = collections.namedtuple('TreeArc', ['tail', 'arc', 'head'])


class StopExploration(Exception):
    """Raised by a handler to end an exploration early.

    The engine fills in the current path before calling the ``halt``
    handler.

    Attributes:

    :path: Vertices of the current path, search start first.
    :arcs: Tree arcs joining consecutive path vertices.

    """

    def __init__(self):
        super().__init__('exploration stopped')
        self.path = []
        self.arcs = []


def run(g, stubs, engine=EngineKind.A_STACK, start_order=None, *,
        basic=False, links=None, memory=scckit.memory.PLAIN):
    """Explore g firing the handlers of a bound stubs namespace.

    :param stubs: Namespace from :func:`scckit.pm.bindstubs`.
    :param engine: An :class:`EngineKind` or its value.
    :param start_order: Vertices to start searches from, in order.
       Defaults to ascending vertex ids.
    :param basic: Use the push-every-advance V_STACK variant.
    :param links: Link array of length n+1 for the A_STACK engine.
       Ignored by the other engines.
    :param memory: Allocator for the engine's own arrays.

    :returns: True if a handler stopped the exploration early.

    """
    engine = EngineKind(engine)
    starts = range(1, g.n + 1) if start_order is None else start_order
    stubs.start(g.n)
    try:
        if engine is EngineKind.RECURSIVE:
            _explore_recursive(g, stubs, starts)
        elif engine is EngineKind.V_STACK:
            _explore_vertexstack(g, stubs, starts, memory, basic)
        else:
            _explore_arcstack(g, stubs, starts, memory, links)
    except StopExploration as stop:
        log.debug('Exploration stopped with {} vertices on the path',
                  len(stop.path))
        if stubs.halt is not None:
            stubs.halt(stop.path, stop.arcs)
        return True
    return False


def _explore_recursive(g, stubs, starts):
    first, tip, nxt = g.first, g.tip, g.next
    unvisited = stubs.unvisited
    previsit = stubs.previsit
    postvisit = stubs.postvisit
    advance = stubs.advance
    tree_advance = stubs.tree_advance
    nontree_traverse = stubs.nontree_traverse
    tree_retreat = stubs.tree_retreat
    retreat = stubs.retreat

    def dfs(v):
        try:
            previsit(v)
            a = first[v]
            while a != NONE:
                w = tip[a]
                if advance is not None:
                    advance(v, a, w)
                if unvisited(w):
                    if tree_advance is not None:
                        tree_advance(v, a, w)
                    try:
                        dfs(w)
                    except StopExploration as stop:
                        if stop.path and stop.path[-1] == w:
                            stop.arcs.append(a)
                        raise
                    if tree_retreat is not None:
                        tree_retreat(v, a, w)
                elif nontree_traverse is not None:
                    nontree_traverse(v, a, w)
                if retreat is not None:
                    retreat(v, a, w)
                a = nxt[a]
        except StopExploration as stop:
            # Collected deepest first while unwinding.
            stop.path.append(v)
            raise
        if postvisit is not None:
            postvisit(v)

    for s in starts:
        if not unvisited(s):
            continue
        if stubs.search_start is not None:
            stubs.search_start(s)
        try:
            dfs(s)
        except StopExploration as stop:
            stop.path.reverse()
            stop.arcs.reverse()
            raise


def _explore_vertexstack(g, stubs, starts, memory, basic):
    # pylint: disable=too-many-locals,too-many-branches,too-many-statements
    g = memory.graph(g)
    first, tip, nxt = g.first, g.tip, g.next
    below = memory.array('below', g.n + 1)
    arc = memory.array('arc', g.n + 1)
    unvisited = stubs.unvisited
    previsit = stubs.previsit
    postvisit = stubs.postvisit
    advance = stubs.advance
    tree_advance = stubs.tree_advance
    nontree_traverse = stubs.nontree_traverse
    tree_retreat = stubs.tree_retreat
    retreat = stubs.retreat
    for s in starts:
        if not unvisited(s):
            continue
        if stubs.search_start is not None:
            stubs.search_start(s)
        v = s
        top = NONE
        done = NONE
        try:
            previsit(v)
            a = first[v]
            while True:
                if a != NONE:
                    w = tip[a]
                    if advance is not None:
                        advance(v, a, w)
                    if unvisited(w):
                        if tree_advance is not None:
                            tree_advance(v, a, w)
                        arc[v] = a
                        if basic or top != v:
                            below[v] = top
                            top = v
                        v = w
                        previsit(v)
                        a = first[v]
                        continue
                    if nontree_traverse is not None:
                        nontree_traverse(v, a, w)
                else:
                    done = v
                    if postvisit is not None:
                        postvisit(v)
                    if v == s:
                        break
                    if not basic and top == v:
                        top = below[v]
                    if top == NONE:
                        raise scckit.errors.InternalInvariantError(
                            'pop from an empty vertex stack')
                    w = v
                    v = top
                    if basic:
                        top = below[v]
                    a = arc[v]
                    if tree_retreat is not None:
                        tree_retreat(v, a, w)
                if retreat is not None:
                    retreat(v, a, w)
                a = nxt[a]
        except StopExploration as stop:
            path = []
            u = top
            while u != NONE:
                path.append(u)
                u = below[u]
            path.reverse()
            if not path or path[-1] != v:
                path.append(v)
            if path[-1] == done:
                path.pop()
            stop.path = path
            stop.arcs = [arc[u] for u in path[:-1]]
            raise


def _explore_arcstack(g, stubs, starts, memory, links):
    # pylint: disable=too-many-locals,too-many-branches,too-many-statements
    g = memory.graph(g)
    first, tip, nxt = g.first, g.tip, g.next
    link = memory.array('link', g.n + 1) if links is None else links
    unvisited = stubs.unvisited
    previsit = stubs.previsit
    postvisit = stubs.postvisit
    advance = stubs.advance
    tree_advance = stubs.tree_advance
    nontree_traverse = stubs.nontree_traverse
    tree_retreat = stubs.tree_retreat
    retreat = stubs.retreat
    for s in starts:
        if not unvisited(s):
            continue
        if stubs.search_start is not None:
            stubs.search_start(s)
        v = s
        top = NONE
        finished = False
        try:
            previsit(v)
            a = first[v]
            while True:
                if a != NONE:
                    w = tip[a]
                    if advance is not None:
                        advance(v, a, w)
                    if unvisited(w):
                        if tree_advance is not None:
                            tree_advance(v, a, w)
                        link[w] = top
                        top = a
                        v = w
                        previsit(v)
                        a = first[v]
                        continue
                    if nontree_traverse is not None:
                        nontree_traverse(v, a, w)
                else:
                    if v == s:
                        finished = True
                        if postvisit is not None:
                            postvisit(v)
                        break
                    if top == NONE:
                        raise scckit.errors.InternalInvariantError(
                            'pop from an empty arc stack')
                    # The slot of v is free once its entering arc is off.
                    a = top
                    top = link[v]
                    if postvisit is not None:
                        postvisit(v)
                    w = v
                    v = tip[top] if top != NONE else s
                    if tree_retreat is not None:
                        tree_retreat(v, a, w)
                if retreat is not None:
                    retreat(v, a, w)
                a = nxt[a]
        except StopExploration as stop:
            arcs = []
            x = top
            while x != NONE:
                arcs.append(x)
                x = link[tip[x]]
            arcs.reverse()
            stop.arcs = arcs
            stop.path = [] if finished else [s] + [tip[x] for x in arcs]
            raise


class VisitMarks:
    """Handlers keeping one visited mark per vertex.

    Also records the preorder, the postorder and the number of
    searches.  Used where an exploration needs no algorithm of its
    own.
    """

    def __init__(self, memory=scckit.memory.PLAIN):
        self.memory = memory
        self.mark = None
        self.preorder = []
        self.postorder = []
        self.searches = 0

    @scckit.pm.hookimpl
    def start(self, n):
        self.mark = mark = self.memory.array('mark', n + 1)
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
        self.mark[v] = 1
        self.preorder.append(v)

    @scckit.pm.hookimpl
    def postvisit(self, v):
        self.postorder.append(v)


class Tracer:
    """Records every event while passing it on to other handlers.

    :param callbacks: Object with marked handlers, it must provide
       ``start``, ``unvisited`` and ``previsit``.  Defaults to
       :class:`VisitMarks`.

    Attributes:

    :events: The recorded :class:`Event` list.

    """

    def __init__(self, callbacks=None):
        if callbacks is None:
            callbacks = VisitMarks()
        self._inner = scckit.pm.bindstubs(
            scckit.explorespec, callbacks,
            required=scckit.explorespec.REQUIRED)
        self.events = []

    @scckit.pm.hookimpl
    def start(self, n):
        self._inner.start(n)

    @scckit.pm.hookimpl
    def unvisited(self, v):
        return self._inner.unvisited(v)

    @scckit.pm.hookimpl
    def search_start(self, s):
        self.events.append(Event(EventKind.SEARCH_START, s, NONE, NONE))
        if self._inner.search_start is not None:
            self._inner.search_start(s)

    @scckit.pm.hookimpl
    def previsit(self, v):
        self.events.append(Event(EventKind.PREVISIT, v, NONE, NONE))
        self._inner.previsit(v)

    @scckit.pm.hookimpl
    def postvisit(self, v):
        self.events.append(Event(EventKind.POSTVISIT, v, NONE, NONE))
        if self._inner.postvisit is not None:
            self._inner.postvisit(v)

    @scckit.pm.hookimpl
    def advance(self, v, a, w):
        if self._inner.advance is not None:
            self._inner.advance(v, a, w)

    @scckit.pm.hookimpl
    def tree_advance(self, v, a, w):
        self.events.append(Event(EventKind.TREE_ADVANCE, v, a, w))
        if self._inner.tree_advance is not None:
            self._inner.tree_advance(v, a, w)

    @scckit.pm.hookimpl
    def nontree_traverse(self, v, a, w):
        self.events.append(Event(EventKind.NONTREE_TRAVERSE, v, a, w))
        if self._inner.nontree_traverse is not None:
            self._inner.nontree_traverse(v, a, w)

    @scckit.pm.hookimpl
    def tree_retreat(self, v, a, w):
        self.events.append(Event(EventKind.TREE_RETREAT, v, a, w))
        if self._inner.tree_retreat is not None:
            self._inner.tree_retreat(v, a, w)

    @scckit.pm.hookimpl
    def retreat(self, v, a, w):
        self.events.append(Event(EventKind.RETREAT, v, a, w))
        if self._inner.retreat is not None:
            self._inner.retreat(v, a, w)

    @scckit.pm.hookimpl
    def halt(self, path, arcs):
        if self._inner.halt is not None:
            self._inner.halt(path, arcs)


def explore(g, engine=EngineKind.A_STACK, callbacks=None, start_order=None,
            *, basic=False):
    """Explore g and return the list of recorded events.

    :param callbacks: Object with marked handlers, see :class:`Tracer`.

    """
    tracer = Tracer(callbacks)
    stubs = scckit.pm.bindstubs(scckit.explorespec, tracer)
    run(g, stubs, engine, start_order, basic=basic)
    return tracer.events


class _Stamper:

    def __init__(self):
        self.pre = []
        self.post = []
        self.tree_arcs = []
        self.time = 0

    @scckit.pm.hookimpl
    def start(self, n):
        self.pre = [0] * (n + 1)
        self.post = [0] * (n + 1)

    @scckit.pm.hookimpl
    def unvisited(self, v):
        return self.pre[v] == 0

    @scckit.pm.hookimpl
    def previsit(self, v):
        self.time += 1
        self.pre[v] = self.time

    @scckit.pm.hookimpl
    def postvisit(self, v):
        self.time += 1
        self.post[v] = self.time

    @scckit.pm.hookimpl
    def tree_advance(self, v, a, w):  # pylint: disable=unused-argument
        self.tree_arcs.append(a)


def compute_pre_post(g, engine=EngineKind.A_STACK, start_order=None):
    """Number the 2n previsits and postvisits consecutively from 1.

    :returns: :class:`TimeStamps`.

    """
    stamper = _Stamper()
    run(g, scckit.pm.bindstubs(scckit.explorespec, stamper),
        engine, start_order)
    return TimeStamps(stamper.pre, stamper.post, frozenset(stamper.tree_arcs))


def classify_arcs(g, stamps, tree_arcs=None):
    """Classify every arc by the ancestor relation of the forest.

    Ancestry is decided by nesting of the pre/post intervals.  Loops
    are their own class.

    :param stamps: :class:`TimeStamps` of an exploration of g.
    :param tree_arcs: Tree arcs of that exploration, defaults to
       ``stamps.tree_arcs``.

    :returns: Dict mapping arc id to :class:`ArcClass`.

    """
    tree = stamps.tree_arcs if tree_arcs is None else frozenset(tree_arcs)
    pre, post = stamps.pre, stamps.post
    classes = {}
    for a, (x, y) in enumerate(g.arcs(), start=1):
        if x == y:
            classes[a] = ArcClass.LOOP
        elif a in tree:
            classes[a] = ArcClass.TREE
        elif pre[y] < pre[x] and post[x] < post[y]:
            classes[a] = ArcClass.BACK
        elif pre[x] < pre[y] and post[y] < post[x]:
            classes[a] = ArcClass.FORWARD
        else:
            classes[a] = ArcClass.CROSS
    return classes


def quick_search(g, start_order=None, on_visit=None,
                 memory=scckit.memory.PLAIN):
    """Visit every vertex reachable from the start vertices once.

    Pops a vertex, visits it, then pushes every unvisited and
    unstacked vertex it has an arc to.  The visit order is neither
    depth-first nor breadth-first.

    :param start_order: Distinct vertices to search from, in order.
       Defaults to ascending vertex ids.
    :param on_visit: Optional callable receiving each visited vertex.

    :returns: The list of visited vertices in visit order.

    """
    order, _ = run_quick_search(g, start_order, on_visit, memory)
    return order


def run_quick_search(g, start_order=None, on_visit=None,
                     memory=scckit.memory.PLAIN):
    """Like :func:`quick_search`, also returning the number of searches."""
    n = g.n
    g = memory.graph(g)
    first, tip, nxt = g.first, g.tip, g.next
    # 0 is unseen; otherwise the vertex below on the stack, plus one.
    mark = memory.array('mark', n + 1)
    for v in range(1, n + 1):
        mark[v] = 0
    starts = range(1, n + 1) if start_order is None else start_order
    order = []
    searches = 0
    for s in starts:
        if mark[s] != 0:
            continue
        searches += 1
        mark[s] = NONE + 1
        top = s
        while top != NONE:
            v = top
            top = mark[v] - 1
            order.append(v)
            if on_visit is not None:
                on_visit(v)
            a = first[v]
            while a != NONE:
                w = tip[a]
                if mark[w] == 0:
                    mark[w] = top + 1
                    top = w
                a = nxt[a]
    return order, searches


class SlotLedger:
    """Checked storage for a link array shared by an engine and an algorithm.

    The engine reads and writes slots through :meth:`engine_view`, the
    algorithm through :meth:`owner_view`.  Once the algorithm has
    written a slot the engine may not touch it again, and each slot
    is claimed at most twice, first as a stack link and then for the
    component leader.

    """

    def __init__(self, size):
        self.slots = [NONE] * size
        self.claims = [0] * size

    def engine_view(self):
        return _EngineSlots(self)

    def owner_view(self):
        return _OwnerSlots(self)


class _EngineSlots:

    def __init__(self, ledger):
        self._ledger = ledger

    def _check(self, v):
        if self._ledger.claims[v]:
            raise scckit.errors.InternalInvariantError(
                'engine used link slot {} after it was claimed'.format(v))

    def __getitem__(self, v):
        self._check(v)
        return self._ledger.slots[v]

    def __setitem__(self, v, value):
        self._check(v)
        self._ledger.slots[v] = value


class _OwnerSlots:

    def __init__(self, ledger):
        self._ledger = ledger

    def __getitem__(self, v):
        return self._ledger.slots[v]

    def __setitem__(self, v, value):
        claims = self._ledger.claims
        claims[v] += 1
        if claims[v] > 2:
            raise scckit.errors.InternalInvariantError(
                'link slot {} claimed a third time'.format(v))
        self._ledger.slots[v] = value
