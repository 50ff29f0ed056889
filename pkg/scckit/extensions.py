"""Condensation, spanning tree certificates and verification.

A strong component result can be certified by two spanning trees per
component, both rooted at the leader and using only arcs inside the
component: an out-tree reaching every member from the leader and an
in-tree reaching the leader from every member.  Together with every
arc respecting the emission order this proves the components are the
strong components.

The in-trees come from the low arcs of :func:`scckit.tarjan.scc_tarjan`
(each follower's arc whose retreat last lowered its low value) and the
out-trees from its tree arcs minus those entering leaders.
:func:`certify` builds both for any claimed partition by searching
inside each component instead.

"""

import collections

import logbook

import scckit.errors
from scckit.components import OrderKind, check_partition
from scckit.dfs import TreeArc
from scckit.graph import NONE, build_graph, reverse_graph, serialize_graph


log = logbook.Logger(__name__)


#: ``graph`` has one vertex per component, numbered in emission order;
#: ``leaders[k]`` is the leader of condensation vertex k.
Condensation = collections.namedtuple('Condensation', ['graph', 'leaders'])

#: ``lowarc`` maps every follower to its low arc.
LowArcForest = collections.namedtuple('LowArcForest', ['lowarc'])

#: ``trees`` maps every leader to its list of :class:`TreeArc`.
OutTreeForest = collections.namedtuple('OutTreeForest', ['trees'])

Verdict = collections.namedtuple('Verdict', ['accepted', 'reason'])


def condense(g, scc):
    """Contract every strong component of g to one vertex.

    The result has no loops and no parallel arcs.  A topologically
    ordered result is reversed first, so the condensation is always
    numbered in reverse topological order.

    :raises scckit.errors.InvalidPartitionError: If scc is not a
       partition of g's vertices or an arc leads to a component
       emitted later.

    """
    check_partition(g.n, scc)
    if scc.order_kind is OrderKind.TOPOLOGICAL:
        scc = scc.reversed()
    tip = g.tip
    index = [0] * (g.n + 1)
    marked = bytearray(len(scc.components) + 1)
    arcs = []
    for k, members in enumerate(scc.components, start=1):
        for v in members:
            index[v] = k
        added = len(arcs)
        for v in members:
            for a in g.out(v):
                j = index[tip[a]]
                if j == k:
                    continue
                if j == 0:
                    raise scckit.errors.InvalidPartitionError(
                        'arc {} leads from component {} to a later one'
                        .format(a, scc.leader[v]))
                if not marked[j]:
                    marked[j] = 1
                    arcs.append((k, j))
        for _, j in arcs[added:]:
            marked[j] = 0
    log.debug('Condensed {} vertices into {} with {} arcs',
              g.n, len(scc.components), len(arcs))
    return Condensation(build_graph(len(scc.components), arcs),
                        [NONE] + scc.leaders())


def serialize_condensation(cond):
    """Return the edge-list text and the ``comp leader`` sidecar text."""
    sidecar = ''.join('{} {}\n'.format(k, cond.leaders[k])
                      for k in range(1, len(cond.leaders)))
    return serialize_graph(cond.graph), sidecar


def build_in_trees(g, scc):
    """Return the low arc in-trees of a run with recorded low arcs.

    :raises ValueError: If scc carries no low arcs.

    """
    if scc.lowarcs is None:
        raise ValueError('result has no recorded low arcs')
    if scc.n != g.n:
        raise ValueError('result is for {} vertices, graph has {}'.format(
            scc.n, g.n))
    return LowArcForest({v: a for v, a in enumerate(scc.lowarcs)
                         if a != NONE})


def build_out_trees(tree_arcs, scc):
    """Split the depth-first forest into one out-tree per component.

    :param tree_arcs: :class:`TreeArc` list of the run producing scc.

    """
    trees = {leader: [] for leader in scc.leaders()}
    for arc in tree_arcs:
        if scc.leader[arc.head] == arc.head:
            continue
        trees[scc.leader[arc.head]].append(arc)
    return OutTreeForest(trees)


def _grow(g, leader, root):
    """Search inside root's component, yielding the arcs of a spanning tree."""
    seen = {root}
    stack = [root]
    while stack:
        v = stack.pop()
        for a in g.out(v):
            w = g.tip[a]
            if w not in seen and leader[w] == root:
                seen.add(w)
                stack.append(w)
                yield v, a, w


def certify(g, scc):
    """Build in-tree and out-tree certificates for a claimed partition.

    Members a component's leader cannot reach, or that cannot reach
    it, inside the component are left out, which makes
    :func:`verify_scc` reject.

    :returns: ``(LowArcForest, OutTreeForest)``.

    """
    check_partition(g.n, scc)
    leaders = scc.leaders()
    trees = {root: [TreeArc(v, a, w) for v, a, w in _grow(g, scc.leader, root)]
             for root in leaders}
    rg = reverse_graph(g)
    lowarc = {}
    for root in leaders:
        for _, a, w in _grow(rg, scc.leader, root):
            lowarc[w] = a
    return LowArcForest(lowarc), OutTreeForest(trees)


def _reaches(members, parent, root):
    """True if following parent from every member ends at root."""
    state = {root: 2}
    for v in members:
        chain = []
        while state.get(v) is None:
            state[v] = 1
            chain.append(v)
            v = parent.get(v)
            if v is None:
                return False
        if state[v] == 1:
            return False
        for u in chain:
            state[u] = 2
    return True


def verify_scc(g, scc, in_trees, out_trees):
    """Check a strong component result against its certificates.

    :returns: :class:`Verdict`; ``reason`` names the first violated
       check of a rejected result.

    :raises scckit.errors.InvalidPartitionError: If scc is not a
       partition of g's vertices.

    """
    # pylint: disable=too-many-return-statements,too-many-branches
    check_partition(g.n, scc)
    tails = g.tails()
    leader = scc.leader

    def arc_ok(a):
        return isinstance(a, int) and 1 <= a <= g.m

    for members in scc.components:
        root = leader[members[0]]
        tree = out_trees.trees.get(root)
        if tree is None:
            return Verdict(False, 'component {} has no out-tree'.format(root))
        parent = {}
        for arc in tree:
            if (not arc_ok(arc.arc) or tails[arc.arc] != arc.tail
                    or g.tip[arc.arc] != arc.head):
                return Verdict(False, 'out-tree arc {} is not in the graph'
                               .format(arc.arc))
            if leader[arc.tail] != root or leader[arc.head] != root:
                return Verdict(False, 'out-tree arc {} leaves component {}'
                               .format(arc.arc, root))
            if arc.head == root or arc.head in parent:
                return Verdict(False, 'out-tree of {} enters {} twice'
                               .format(root, arc.head))
            parent[arc.head] = arc.tail
        if len(parent) != len(members) - 1 or not _reaches(members, parent,
                                                           root):
            return Verdict(False, 'out-tree of {} does not span it'
                           .format(root))
        nxt = {}
        for v in members:
            if v == root:
                if v in in_trees.lowarc:
                    return Verdict(False, 'leader {} has a low arc'.format(v))
                continue
            a = in_trees.lowarc.get(v)
            if a is None:
                return Verdict(False, 'vertex {} has no low arc'.format(v))
            if not arc_ok(a) or tails[a] != v:
                return Verdict(False, 'low arc {} of {} does not leave it'
                               .format(a, v))
            if leader[g.tip[a]] != root:
                return Verdict(False, 'low arc {} leaves component {}'
                               .format(a, root))
            nxt[v] = g.tip[a]
        if not _reaches(members, nxt, root):
            return Verdict(False, 'in-tree of {} does not reach it from '
                           'every member'.format(root))
    index = scc.index()
    later_ok = scc.order_kind is OrderKind.TOPOLOGICAL
    for a in range(1, g.m + 1):
        x, y = index[tails[a]], index[g.tip[a]]
        if (x > y) if later_ok else (x < y):
            return Verdict(False, 'arc {} ({} -> {}) goes against the '
                           'component order'.format(a, tails[a], g.tip[a]))
    return Verdict(True, None)
