"""Strong components by finding cycles and merging vertex sets.

Every previsited vertex starts as its own set.  When a non-tree arc
from the current vertex leads to a vertex w in a live set, the arc
closes a cycle through the current path, and all sets whose leaders
were previsited after w's leader are merged into w's set.  When a set
leader is postvisited its set is a strong component.

Sets are kept on two stacks.  ``L`` holds the set leaders, all on
the current path and in path order.  ``F`` holds the followers in
previsit order on top of a guard vertex 0 whose ``pre`` is 0.  A set
is its leader plus the followers whose previsit times lie between
the leader's and the next leader's on ``L``.  The two stacks share
one ``link`` array, which afterwards holds each vertex's component
leader; together with ``pre`` and the engine's stack this is three
words per vertex.

Components come out in reverse topological order, the vertices of
each in preorder with the leader first.

"""

import collections

import logbook

import scckit.errors
import scckit.explorespec
import scckit.memory
import scckit.pm
import scckit.testkit
from scckit.components import OrderKind, SccResult, WithinOrder
from scckit.dfs import EngineKind, StopExploration
from scckit.graph import NONE


log = logbook.Logger(__name__)


CycleOptions = collections.namedtuple(
    'CycleOptions', ['engine', 'stop_early', 'debug'],
    defaults=[EngineKind.A_STACK, False, False])


class Cycle:
    """Exploration handlers for the two-stack set merging.

    Attributes:

    :pre: Previsit times, 0 when unvisited and ``2n+1`` once the
       vertex's component is complete.
    :link: Stack links, then component leaders.
    :ltop: Top of the leader stack, NONE when empty.
    :ftop: Top of the follower stack, NONE when at the guard.
    :depth: Number of leaders on the leader stack.

    """
    # pylint: disable=too-many-instance-attributes

    def __init__(self, n, stop_early=False, memory=scckit.memory.PLAIN):
        self.n = n
        self.stop_early = stop_early
        self.memory = memory
        self.inf = 2 * n + 1
        self.pre = memory.array('pre', n + 1)
        self.link = memory.array('link', n + 1)
        self.time = 0
        self.count = 0
        self.ltop = NONE
        self.ftop = NONE
        self.depth = 0
        self.root = NONE
        self.components = []

    @scckit.pm.hookimpl
    def start(self, n):
        pre = self.pre
        for v in range(n + 1):
            pre[v] = 0

    @scckit.pm.hookimpl
    def unvisited(self, v):
        return self.pre[v] == 0

    @scckit.pm.hookimpl
    def search_start(self, s):
        self.root = s

    @scckit.pm.hookimpl
    def previsit(self, v):
        self.time += 1
        self.pre[v] = self.time
        self.link[v] = self.ltop
        self.ltop = v
        self.depth += 1
        self.count += 1
        self._check_done()

    @scckit.pm.hookimpl
    def nontree_traverse(self, v, a, w):  # pylint: disable=unused-argument
        pre, link = self.pre, self.link
        if self.ltop == NONE:
            raise scckit.errors.InternalInvariantError(
                'leader stack is empty during a search')
        wpre = pre[w]
        while wpre < pre[self.ltop]:
            x = self.ltop
            self.ltop = link[x]
            link[x] = self.ftop
            self.ftop = x
            self.depth -= 1
        self._check_done()

    @scckit.pm.hookimpl
    def postvisit(self, v):
        if v != self.ltop:
            return
        pre, link = self.pre, self.link
        vpre = pre[v]
        members = []
        while vpre < pre[self.ftop]:
            x = self.ftop
            members.append((pre[x], x))
            self.ftop = link[x]
            link[x] = v
            pre[x] = self.inf
        self.ltop = link[v]
        self.depth -= 1
        link[v] = v
        pre[v] = self.inf
        self.components.append(_preorder(v, members))
        self._check_done()

    def stop_early_trigger(self):
        """Return whether every vertex is previsited and L holds one leader.

        That leader is the search start, and everything still
        unfinished belongs to its component.
        """
        return self.count == self.n and self.depth == 1

    def _check_done(self):
        if self.stop_early and self.stop_early_trigger():
            raise StopExploration()

    @scckit.pm.hookimpl
    def halt(self, path, arcs):  # pylint: disable=unused-argument
        """Finish the last component: the search start plus all of F."""
        pre, link = self.pre, self.link
        root = self.root
        members = []
        x = self.ftop
        while x != NONE:
            members.append((pre[x], x))
            x = link[x]
        followers = {x for _, x in members}
        stray = [u for u in path[1:] if u not in followers]
        if self.ltop != root or stray:
            raise scckit.errors.InternalInvariantError(
                'early stop with leaders {} left besides {}'.format(
                    stray, root))
        for _, x in members:
            link[x] = root
            pre[x] = self.inf
        link[root] = root
        pre[root] = self.inf
        self.ftop = self.ltop = NONE
        self.depth = 0
        self.components.append(_preorder(root, members))

    def result(self):
        """Return the :class:`SccResult` of the finished exploration."""
        if self.ftop != NONE or self.ltop != NONE:
            raise scckit.errors.InternalInvariantError(
                'stacks not empty at termination')
        return _make_result(self.n, self.components,
                            self.memory.peek(self.link))


def _preorder(leader, members):
    """Return leader followed by members, ``(pre, x)`` pairs, by pre.

    F is not ordered by pre, so this sorts, costing O(k log k) for a
    component of k vertices.  Only the member listing pays the log
    factor, the component search itself stays linear.
    """
    members.sort()
    return [leader] + [x for _, x in members]


def _make_result(n, components, link):
    leader = list(link[:n + 1])
    leader[NONE] = NONE
    log.debug('Found {} strong components', len(components))
    return SccResult(leader, components, OrderKind.REVERSE_TOPOLOGICAL,
                     WithinOrder.PREORDER)


class CheckedCycle(Cycle):
    """:class:`Cycle` checking its set invariants after every event.

    Sets are tracked a second time in a plain dict and compared with
    what the two stacks imply.  Set members are checked to be mutually
    reachable and completed components to be exactly the strong
    components, using an oracle partition of the graph.

    :param oracle: :class:`scckit.testkit.OraclePartition` of the graph.

    """

    def __init__(self, n, oracle, stop_early=False):
        super().__init__(n, stop_early)
        self.oracle = oracle
        self.path = []
        self.owner = {}

    @scckit.pm.hookimpl
    def previsit(self, v):
        self.path.append(v)
        self.owner[v] = v
        try:
            super().previsit(v)
        finally:
            self.check()

    @scckit.pm.hookimpl
    def nontree_traverse(self, v, a, w):
        before = self._stack(self.ltop)
        try:
            super().nontree_traverse(v, a, w)
        finally:
            after = self._stack(self.ltop)
            if len(after) < len(before):
                self._check_union(v, w, after[-1], before[len(after):])
            self.check()

    @scckit.pm.hookimpl
    def postvisit(self, v):
        complete = v == self.ltop
        try:
            super().postvisit(v)
        finally:
            self.path.pop()
            if complete:
                members = [x for x, lead in self.owner.items() if lead == v]
                for x in members:
                    del self.owner[x]
                component = self.components[-1]
                if set(component) != set(members):
                    self._fail('component {} differs from set {}'.format(
                        component, members))
                if set(component) != self.oracle.component(v):
                    self._fail('component {} is not a strong component'.format(
                        component))
            self.check()

    def _fail(self, msg):
        raise scckit.errors.InternalInvariantError(msg)

    def _check_union(self, v, w, u, merged):
        """Arc (v, w) merged the sets of leaders into the set of u.

        The tree path from u to v plus the arc close a cycle through
        every merged leader.
        """
        if u not in self.path or self.pre[w] < self.pre[u]:
            self._fail('merge on ({}, {}) left leader {} off the path'.format(
                v, w, u))
        for x in merged:
            if not self.oracle.same(x, u):
                self._fail('merged leader {} is on no cycle with {}'.format(
                    x, u))
        for x, lead in self.owner.items():
            if lead in merged:
                self.owner[x] = u

    def _stack(self, top):
        items = []
        x = top
        while x != NONE:
            items.append(x)
            x = self.link[x]
        items.reverse()
        return items

    def check(self):
        """Check the set invariants, raising InternalInvariantError."""
        # pylint: disable=too-many-branches
        pre = self.pre
        leaders = self._stack(self.ltop)
        followers = self._stack(self.ftop)
        live = {x for x in range(1, self.n + 1) if 0 < pre[x] < self.inf}
        if set(leaders) | set(followers) != live:
            self._fail('previsited vertices {} not all in sets'.format(
                sorted(live)))
        if set(leaders) & set(followers):
            self._fail('vertex on both stacks')
        if set(self.owner) != live:
            self._fail('tracked sets {} differ from the stacks'.format(
                sorted(self.owner)))
        positions = [self.path.index(x) if x in self.path else -1
                     for x in leaders]
        if -1 in positions or positions != sorted(positions):
            self._fail('leaders {} not on the path in order'.format(leaders))
        times = [pre[x] for x in leaders]
        for x in live:
            # The leader with the largest pre not above pre[x].
            lead = None
            for y, t in zip(leaders, times):
                if t <= pre[x]:
                    lead = y
            if lead is None or self.owner[x] != lead:
                self._fail('vertex {} belongs to {}, pre interval says {}'
                           .format(x, self.owner.get(x), lead))
            if not self.oracle.same(x, lead):
                self._fail('vertex {} and its leader {} are not mutually '
                           'reachable'.format(x, lead))
        for x in self.path:
            if self.owner.get(x) not in leaders:
                self._fail('path vertex {} has no leader on the stack'
                           .format(x))


def scc_cycle(g, opts=None):
    """Find the strong components of g.

    :param opts: :class:`CycleOptions`, defaults apply if omitted.
       With ``debug`` the set invariants are checked at every event
       against an oracle, which limits the graph size.

    :returns: :class:`scckit.components.SccResult` in reverse
       topological order, vertices of each component in preorder.

    """
    opts = opts or CycleOptions()
    engine = EngineKind(opts.engine)
    if engine is EngineKind.A_STACK and not opts.debug:
        return run_arcstack(g, opts.stop_early).result
    if opts.debug:
        algo = CheckedCycle(g.n, scckit.testkit.oracle_scc(g), opts.stop_early)
    else:
        algo = Cycle(g.n, opts.stop_early)
    skip = () if opts.stop_early else ('halt',)
    stubs = scckit.pm.bindstubs(scckit.explorespec, algo, skip=skip)
    scckit.dfs.run(g, stubs, engine)
    return algo.result()


ArcStackRun = collections.namedtuple('ArcStackRun', ['result', 'searches'])


def run_arcstack(g, stop_early=False, memory=scckit.memory.PLAIN,
                 start_order=None):
    """Arc-stack exploration with the handlers written into the loop.

    The top of ``L`` and its previsit time live in locals.  This is
    the default implementation of :func:`scc_cycle` and the one the
    counting executor measures.

    :returns: :class:`ArcStackRun` with the result and the number of
       searches started.

    """
    # pylint: disable=too-many-locals,too-many-branches,too-many-statements
    n = g.n
    g = memory.graph(g)
    first, tip, nxt = g.first, g.tip, g.next
    pre = memory.array('pre', n + 1)
    ptr = memory.array('ptr', n + 1)
    link = memory.array('link', n + 1)
    inf = 2 * n + 1
    for v in range(n + 1):
        pre[v] = 0
    components = []
    time = count = searches = 0
    ftop = NONE
    stopped = False
    s = NONE
    starts = range(1, n + 1) if start_order is None else start_order
    for s in starts:
        if pre[s] != 0:
            continue
        searches += 1
        time += 1
        count += 1
        pre[s] = time
        link[s] = NONE
        ltop, ltop_pre, depth = s, time, 1
        if stop_early and count == n:
            stopped = True
            break
        v = s
        top = NONE
        a = first[v]
        while True:
            if a != NONE:
                w = tip[a]
                wpre = pre[w]
                if wpre == 0:
                    ptr[w] = top
                    top = a
                    v = w
                    time += 1
                    count += 1
                    pre[v] = time
                    link[v] = ltop
                    ltop, ltop_pre = v, time
                    depth += 1
                    a = first[v]
                    continue
                if wpre < ltop_pre:
                    while wpre < ltop_pre:
                        x = ltop
                        ltop = link[x]
                        ltop_pre = pre[ltop]
                        link[x] = ftop
                        ftop = x
                        depth -= 1
                    if stop_early and count == n and depth == 1:
                        stopped = True
                        break
            else:
                if v != s:
                    if top == NONE:
                        raise scckit.errors.InternalInvariantError(
                            'pop from an empty arc stack')
                    a = top
                    top = ptr[v]
                if v == ltop:
                    members = []
                    while True:
                        xpre = pre[ftop]
                        if xpre <= ltop_pre:
                            break
                        x = ftop
                        ftop = link[x]
                        link[x] = v
                        pre[x] = inf
                        members.append((xpre, x))
                    ltop = link[v]
                    ltop_pre = pre[ltop]
                    link[v] = v
                    pre[v] = inf
                    depth -= 1
                    components.append(_preorder(v, members))
                    if v != s and stop_early and count == n and depth == 1:
                        stopped = True
                        break
                if v == s:
                    break
                v = tip[top] if top != NONE else s
            a = nxt[a]
        if stopped:
            break
    if stopped:
        members = []
        x = ftop
        while x != NONE:
            members.append((pre[x], x))
            x = link[x]
        for _, x in members:
            link[x] = s
            pre[x] = inf
        link[s] = s
        pre[s] = inf
        components.append(_preorder(s, members))
    result = _make_result(n, components, memory.peek(link))
    return ArcStackRun(result, searches)
