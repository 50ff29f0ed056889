"""Strong components by the low computation and a follower stack.

Each vertex gets a ``low`` value: 0 while unvisited, its previsit time
when previsited, and the minimum over the low values of the arcs it
retreats over after that.  A vertex whose low value still equals its
previsit time at postvisit is the leader of a strong component; all
other vertices are followers and wait on the follower stack ``F``
until their leader is postvisited.  ``F`` sits on a guard vertex 0
with low value 0, so popping needs no emptiness test.  Vertices of
completed components get a low value above every live one, which
keeps later retreats from seeing them.

Components come out in reverse topological order, the vertices of
each in postorder with the leader last.

Two layouts of the per-vertex data are supported.  The plain layout
keeps a separate ``lead`` flag.  With ``encode_leader_bits`` time
advances by 2 and the lowest bit of ``low`` is the negated leader
flag: a previsit leaves it clear, any decrease sets it.  In both the
``link`` slot serves the engine's arc stack, then the follower stack,
then holds the component leader.

"""

import collections

import logbook

import scckit.errors
import scckit.explorespec
import scckit.memory
import scckit.pm
from scckit.components import OrderKind, SccResult, WithinOrder
from scckit.dfs import EngineKind, SlotLedger, StopExploration, TreeArc
from scckit.graph import NONE


log = logbook.Logger(__name__)


TarjanOptions = collections.namedtuple(
    'TarjanOptions',
    ['engine', 'encode_leader_bits', 'stop_early', 'numeric_components',
     'record_lowarcs', 'debug_slots'],
    defaults=[EngineKind.A_STACK, False, False, False, False, False])
TarjanOptions.__doc__ = """Options for :func:`scc_tarjan`.

:engine: The :class:`scckit.dfs.EngineKind` to explore with.
:encode_leader_bits: Keep the leader flag in the lowest bit of low.
:stop_early: Finish as soon as every vertex is previsited and the
   current vertex's low value reaches that of the search start.
:numeric_components: Record the leader of a completed vertex in its
   low value (leader plus an offset) instead of its link slot.
:record_lowarcs: Record low arcs and tree arcs for certificates.
:debug_slots: Check the sharing of link slots with the engine.
"""

LeaderBits = collections.namedtuple('LeaderBits', ['is_leader', 'decoded_time'])


def leader_bit_ops(low):
    """Decode an encoded low value.

    >>> leader_bit_ops(6)
    LeaderBits(is_leader=True, decoded_time=3)
    >>> leader_bit_ops(7)
    LeaderBits(is_leader=False, decoded_time=3)

    """
    return LeaderBits(low & 1 == 0, low >> 1)


class _Scale:
    """Constants of one low value layout for n vertices."""

    def __init__(self, n, encode, numeric):
        self.encode = encode
        self.numeric = numeric
        self.step = 2 if encode else 1
        # Above every live value, 2n+1 in either scale.
        self.inf = 4 * n + 3 if encode else 2 * n + 1
        self.offset = 2 * n + 1 if encode else n

    def done(self, leader):
        """Low value of a vertex in the completed component of leader."""
        return leader + self.offset if self.numeric else self.inf


class Tarjan:
    """Exploration handlers computing strong components.

    :param n: Number of vertices.
    :param opts: :class:`TarjanOptions`.
    :param links: Link array to share with the engine, or None.

    """
    # pylint: disable=too-many-instance-attributes

    def __init__(self, n, opts, links=None, memory=scckit.memory.PLAIN):
        self.n = n
        self.opts = opts
        self.scale = _Scale(n, opts.encode_leader_bits, opts.numeric_components)
        self.memory = memory
        self.low = memory.array('low', n + 1)
        self.lead = (None if opts.encode_leader_bits
                     else memory.array('lead', n + 1))
        self.link = memory.array('link', n + 1) if links is None else links
        self.lowarc = [NONE] * (n + 1) if opts.record_lowarcs else None
        self.tree_arcs = [] if opts.record_lowarcs else None
        self.time = 0
        self.count = 0
        self.root = NONE
        self.top = NONE
        self.components = []

    @scckit.pm.hookimpl
    def start(self, n):
        low = self.low
        for v in range(n + 1):
            low[v] = 0

    @scckit.pm.hookimpl
    def unvisited(self, v):
        return self.low[v] == 0

    @scckit.pm.hookimpl
    def search_start(self, s):
        self.root = s

    @scckit.pm.hookimpl
    def previsit(self, v):
        self.time += self.scale.step
        self.low[v] = self.time
        if self.lead is not None:
            self.lead[v] = True
        self.count += 1
        if self.opts.stop_early:
            self._check_done(v)

    @scckit.pm.hookimpl
    def tree_advance(self, v, a, w):
        self.tree_arcs.append(TreeArc(v, a, w))

    @scckit.pm.hookimpl
    def retreat(self, v, a, w):
        low = self.low
        wlow = low[w]
        if self.scale.encode:
            wlow |= 1
        if wlow < low[v]:
            low[v] = wlow
            if self.lead is not None:
                self.lead[v] = False
            if self.lowarc is not None:
                self.lowarc[v] = a
            if self.opts.stop_early:
                self._check_done(v)

    def _same_low(self, x, y):
        if self.scale.encode:
            return self.low[x] >> 1 == self.low[y] >> 1
        return self.low[x] == self.low[y]

    def stop_early_trigger(self, v):
        """Return whether the rest of the search is one component.

        True once every vertex is previsited and the current vertex v
        has reached the low value of the search start.  The
        unfinished vertices then all lie in the start's component.
        """
        return self.count == self.n and self._same_low(v, self.root)

    def _check_done(self, v):
        if self.stop_early_trigger(v):
            raise StopExploration()

    def _is_leader(self, v):
        if self.lead is None:
            return self.low[v] & 1 == 0
        return self.lead[v]

    def _complete(self, x, leader):
        if not self.scale.numeric:
            self.link[x] = leader
        self.low[x] = self.scale.done(leader)

    @scckit.pm.hookimpl
    def postvisit(self, v):
        low, link = self.low, self.link
        if not self._is_leader(v):
            link[v] = self.top
            self.top = v
            return
        vlow = low[v]
        members = []
        while low[self.top] >= vlow:
            x = self.top
            if x == NONE:
                raise scckit.errors.InternalInvariantError(
                    'follower stack popped its guard')
            self.top = link[x]
            self._complete(x, v)
            members.append(x)
        members.reverse()
        members.append(v)
        self._complete(v, v)
        self.components.append(members)

    @scckit.pm.hookimpl
    def halt(self, path, arcs):
        """Finish the last component from F and the current path."""
        low = self.low
        if self.lowarc is not None:
            # Replay the tree retreats the early stop skipped.
            for i in range(len(path) - 1, 0, -1):
                v, w = path[i - 1], path[i]
                wlow = low[w] | 1 if self.scale.encode else low[w]
                if wlow < low[v]:
                    low[v] = wlow
                    self.lowarc[v] = arcs[i - 1]
        members = []
        x = self.top
        while x != NONE:
            members.append(x)
            x = self.link[x]
        self.top = NONE
        members.reverse()
        members.extend(reversed(path))
        leader = path[0] if path else self.root
        for x in members:
            self._complete(x, leader)
        self.components.append(members)

    def result(self):
        """Return the :class:`SccResult` of the finished exploration."""
        if self.top != NONE:
            raise scckit.errors.InternalInvariantError(
                'follower stack not empty at termination')
        return _make_result(self.n, self.components, self.memory.peek(self.low),
                            self.link, self.scale, self.lowarc, self.tree_arcs)


def _make_result(n, components, low, link, scale, lowarcs=None,
                 tree_arcs=None):
    # pylint: disable=too-many-arguments
    leader = [NONE] * (n + 1)
    for v in range(1, n + 1):
        if scale.numeric:
            leader[v] = low[v] - scale.offset
        else:
            leader[v] = link[v]
    log.debug('Found {} strong components', len(components))
    return SccResult(leader, components, OrderKind.REVERSE_TOPOLOGICAL,
                     WithinOrder.POSTORDER, lowarcs, tree_arcs)


def scc_tarjan(g, opts=None):
    """Find the strong components of g.

    :param opts: :class:`TarjanOptions`, defaults apply if omitted.

    :returns: :class:`scckit.components.SccResult` in reverse
       topological order, vertices of each component in postorder.

    """
    opts = opts or TarjanOptions()
    engine = EngineKind(opts.engine)
    if (engine is EngineKind.A_STACK
            and not (opts.record_lowarcs or opts.debug_slots)):
        return run_arcstack(g, opts).result
    engine_links = owner_links = None
    if engine is EngineKind.A_STACK:
        if opts.debug_slots:
            ledger = SlotLedger(g.n + 1)
            engine_links = ledger.engine_view()
            owner_links = ledger.owner_view()
        else:
            engine_links = owner_links = [NONE] * (g.n + 1)
    algo = Tarjan(g.n, opts, links=owner_links)
    skip = ()
    if not opts.record_lowarcs:
        skip += ('tree_advance',)
    if not opts.stop_early:
        skip += ('halt',)
    stubs = scckit.pm.bindstubs(scckit.explorespec, algo, skip=skip)
    scckit.dfs.run(g, stubs, engine, links=engine_links)
    return algo.result()


ArcStackRun = collections.namedtuple('ArcStackRun', ['result', 'searches'])


def run_arcstack(g, opts=None, memory=scckit.memory.PLAIN, start_order=None):
    """Arc-stack exploration with the handlers written into the loop.

    The current vertex's low value and leader flag live in locals and
    are written back when the exploration leaves the vertex, either
    advancing to a child or postvisiting it.  This is the default
    implementation of :func:`scc_tarjan` and the one the counting
    executor measures.  ``record_lowarcs`` and ``debug_slots`` are not
    supported here.

    :returns: :class:`ArcStackRun` with the result and the number of
       searches started.

    """
    # pylint: disable=too-many-locals,too-many-branches,too-many-statements
    opts = opts or TarjanOptions()
    n = g.n
    scale = _Scale(n, opts.encode_leader_bits, opts.numeric_components)
    encode, numeric, step = scale.encode, scale.numeric, scale.step
    stop_early = opts.stop_early
    g = memory.graph(g)
    first, tip, nxt = g.first, g.tip, g.next
    low = memory.array('low', n + 1)
    link = memory.array('link', n + 1)
    lead = None if encode else memory.array('lead', n + 1)
    for v in range(n + 1):
        low[v] = 0
    components = []
    time = count = searches = 0
    ftop = NONE
    stopped = False
    v = top = s = NONE
    starts = range(1, n + 1) if start_order is None else start_order
    for s in starts:
        if low[s] != 0:
            continue
        searches += 1
        time += step
        count += 1
        v = s
        top = NONE
        vlow = slow = time
        vlead = True
        low[v] = vlow
        if stop_early and count == n:
            stopped = True
            break
        a = first[v]
        while True:
            if a != NONE:
                w = tip[a]
                wlow = low[w]
                if wlow == 0:
                    low[v] = vlow
                    if lead is not None:
                        lead[v] = vlead
                    link[w] = top
                    top = a
                    v = w
                    time += step
                    count += 1
                    vlow = time
                    vlead = True
                    low[v] = vlow
                    a = first[v]
                    continue
            else:
                if v != s:
                    if top == NONE:
                        raise scckit.errors.InternalInvariantError(
                            'pop from an empty arc stack')
                    a = top
                    top = link[v]
                if (vlow & 1 == 0) if encode else vlead:
                    members = []
                    while low[ftop] >= vlow:
                        x = ftop
                        if x == NONE:
                            raise scckit.errors.InternalInvariantError(
                                'follower stack popped its guard')
                        ftop = link[x]
                        if numeric:
                            low[x] = v + scale.offset
                        else:
                            link[x] = v
                            low[x] = scale.inf
                        members.append(x)
                    members.reverse()
                    members.append(v)
                    components.append(members)
                    wlow = scale.done(v)
                    if not numeric:
                        link[v] = v
                    low[v] = wlow
                else:
                    link[v] = ftop
                    ftop = v
                    low[v] = vlow
                    wlow = vlow
                if v == s:
                    break
                w = v
                v = tip[top] if top != NONE else s
                vlow = low[v]
                if lead is not None:
                    vlead = lead[v]
            # Retreat over a, tree or not.
            if encode:
                wlow |= 1
            if wlow < vlow:
                vlow = wlow
                vlead = False
                if stop_early and count == n:
                    if (vlow >> 1 == slow >> 1) if encode else vlow == slow:
                        stopped = True
                        break
            a = nxt[a]
        if stopped:
            break
    if stopped:
        # The last component is F plus the current path, deepest first.
        members = []
        x = ftop
        while x != NONE:
            members.append(x)
            x = link[x]
        members.reverse()
        x = top
        while x != NONE:
            u = tip[x]
            members.append(u)
            x = link[u]
        members.append(s)
        for x in members:
            if not numeric:
                link[x] = s
            low[x] = scale.done(s)
        components.append(members)
    result = _make_result(n, components, memory.peek(low), memory.peek(link),
                          scale)
    return ArcStackRun(result, searches)
