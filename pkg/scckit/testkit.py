"""Oracle, graph generators and trace checks for testing.

The oracle computes strong components from plain reachability, using
only :mod:`scckit.graph` and :func:`scckit.dfs.quick_search`, so it
shares no code with the depth-first engines it is used to test.

"""

import collections
import enum
import random

import logbook

import scckit.errors
import scckit.settings
from scckit.dfs import EventKind, quick_search
from scckit.graph import NONE, Diagnostic, build_graph


log = logbook.Logger(__name__)


class OraclePartition:
    """Strong components by mutual reachability.

    Attributes:

    :ident: List mapping every vertex to the smallest vertex of its
       component.

    """

    def __init__(self, ident):
        self.ident = ident

    def same(self, u, v):
        return self.ident[u] == self.ident[v]

    def component(self, v):
        """Return the set of vertices in v's component."""
        return {u for u in range(1, len(self.ident)) if self.ident[u] ==
                self.ident[v]}

    def classes(self):
        """Return the components as a list of sorted lists."""
        groups = collections.defaultdict(list)
        for v in range(1, len(self.ident)):
            groups[self.ident[v]].append(v)
        return [groups[key] for key in sorted(groups)]

    def partition(self):
        return frozenset(frozenset(members) for members in self.classes())


def closure(g):
    """Return per vertex the set of vertices it reaches, itself included."""
    return [set()] + [set(quick_search(g, [v])) for v in range(1, g.n + 1)]


def oracle_scc(g, limit=None):
    """Compute strong components from per-vertex reachability.

    :param limit: Largest n accepted, from the settings by default.

    :raises scckit.errors.TooLargeError: Above the limit.

    """
    if limit is None:
        limit = scckit.settings.default().oracle.limit
    if g.n > limit:
        raise scckit.errors.TooLargeError(
            'oracle limited to {} vertices, graph has {}'.format(limit, g.n))
    reach = closure(g)
    ident = [NONE] * (g.n + 1)
    for u in range(1, g.n + 1):
        if ident[u] != NONE:
            continue
        for v in reach[u]:
            if u in reach[v]:
                ident[v] = u
    return OraclePartition(ident)


class Family(enum.Enum):
    """Generated graph families."""

    GNM_RANDOM = 'gnm'
    DAG = 'dag'
    CYCLE_CHAIN = 'cycle-chain'
    COMPLETE = 'complete'
    MULTI_LOOP = 'multi-loop'
    DEEP_PATH = 'deep-path'

    def __str__(self):
        return self.value


GenSpec = collections.namedtuple('GenSpec',
                                 ['family', 'n', 'm', 'seed', 'cycles'],
                                 defaults=[0, 0, 2])
GenSpec.__doc__ = """What to generate.

:family: A :class:`Family` or its value.
:n: Number of vertices.
:m: Number of arcs, ignored by COMPLETE, CYCLE_CHAIN and DEEP_PATH.
:seed: Seed of the random generator.
:cycles: Number of cycles of a CYCLE_CHAIN.
"""


def _endpoints(rng, n, m):
    vertices = range(1, n + 1)
    return list(zip(rng.choices(vertices, k=m), rng.choices(vertices, k=m)))


def generate(spec):
    """Return the graph described by a :class:`GenSpec`.

    The same spec always yields the same graph.

    :raises scckit.errors.BadSpecError: If the family cannot produce
       the requested size.

    """
    # pylint: disable=too-many-branches
    try:
        family = Family(spec.family)
    except ValueError:
        raise scckit.errors.BadSpecError(
            'unknown family {!r}'.format(spec.family)) from None
    n, m = spec.n, spec.m
    if n < 0 or m < 0:
        raise scckit.errors.BadSpecError(
            'negative size n={} m={}'.format(n, m))
    rng = random.Random(spec.seed)
    if family is Family.GNM_RANDOM:
        if n == 0 and m > 0:
            raise scckit.errors.BadSpecError('arcs need vertices')
        arcs = _endpoints(rng, n, m)
    elif family is Family.DAG:
        if n < 2 and m > 0:
            raise scckit.errors.BadSpecError(
                'an acyclic graph with arcs needs two vertices')
        rank = list(range(1, n + 1))
        rng.shuffle(rank)
        arcs = []
        for _ in range(m):
            i, j = sorted(rng.sample(range(n), 2))
            arcs.append((rank[i], rank[j]))
    elif family is Family.CYCLE_CHAIN:
        k = spec.cycles
        if n > 0 and not 1 <= k <= n:
            raise scckit.errors.BadSpecError(
                'cannot split {} vertices into {} cycles'.format(n, k))
        arcs = []
        heads = []
        lo = 1
        for i in range(k if n else 0):
            size = n // k + (1 if i < n % k else 0)
            cycle = list(range(lo, lo + size))
            arcs.extend(zip(cycle, cycle[1:] + cycle[:1]))
            heads.append(lo)
            lo += size
        arcs.extend(zip(heads, heads[1:]))
    elif family is Family.COMPLETE:
        arcs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)
                if u != v]
    elif family is Family.MULTI_LOOP:
        if n == 0 and m > 0:
            raise scckit.errors.BadSpecError('arcs need vertices')
        arcs = []
        if m >= 1:
            r = rng.randint(1, n)
            arcs.append((r, r))
        if m >= 3:
            pair = (rng.randint(1, n), rng.randint(1, n))
            arcs.extend([pair, pair])
        arcs.extend(_endpoints(rng, n, m - len(arcs)))
        rng.shuffle(arcs)
    else:
        arcs = [(v, v + 1) for v in range(1, n)]
    return build_graph(n, arcs)


def corpus(per_family=None, max_n=None, max_m=None, seed=None,
           families=None, settings=None):
    """Yield ``(GenSpec, Graph)`` pairs for a reproducible test corpus.

    Sizes are drawn from a generator seeded by ``seed``; missing
    arguments come from the ``corpus`` settings.

    :param families: Families to include, all by default.

    """
    # pylint: disable=too-many-arguments
    conf = (settings or scckit.settings.default()).corpus
    per_family = conf.per_family if per_family is None else per_family
    max_n = conf.max_n if max_n is None else max_n
    max_m = conf.max_m if max_m is None else max_m
    seed = conf.seed if seed is None else seed
    for family in families or list(Family):
        family = Family(family)
        rng = random.Random('{}:{}'.format(seed, family.value))
        for _ in range(per_family):
            n = rng.randint(0, max_n)
            m = rng.randint(0, max_m)
            cycles = 2
            if family is Family.DAG and n < 2:
                m = 0
            elif family in (Family.GNM_RANDOM, Family.MULTI_LOOP) and n == 0:
                m = 0
            elif family is Family.COMPLETE:
                while n * (n - 1) > max_m:
                    n //= 2
            elif family is Family.CYCLE_CHAIN and n:
                cycles = rng.randint(1, n)
            spec = GenSpec(family, n, m, rng.randrange(2 ** 32), cycles)
            yield spec, generate(spec)


def check_trace(trace, g):
    """Check an exploration trace of g for structural soundness.

    Checks previsit and postvisit counts, nesting of visits and arcs,
    that every arc out of a visited vertex is advanced and retreated
    exactly once and that the retreat over a non-tree arc immediately
    follows its advance.

    :returns: A list of :class:`scckit.graph.Diagnostic`, codes
       ``COUNT``, ``NESTING`` and ``PAIRING``.

    """
    # pylint: disable=too-many-branches,too-many-statements
    diags = []
    pre = [0] * (g.n + 1)
    post = [0] * (g.n + 1)
    advanced = [0] * (g.m + 1)
    retreated = [0] * (g.m + 1)
    tails = g.tails()
    path = []
    current = {}
    previous = None
    for i, event in enumerate(trace):
        kind, v, a, w = event
        if (previous is not None and previous.kind is EventKind.NONTREE_TRAVERSE
                and (kind is not EventKind.RETREAT or a != previous.a)):
            diags.append(Diagnostic(
                'PAIRING', 'event {}: retreat over non-tree arc {} does not '
                'follow its advance'.format(i, previous.a)))
        if kind is EventKind.SEARCH_START:
            if path:
                diags.append(Diagnostic(
                    'NESTING', 'event {}: search from {} starts inside the '
                    'search of {}'.format(i, v, path[0])))
        elif kind is EventKind.PREVISIT:
            pre[v] += 1
            if pre[v] > 1:
                diags.append(Diagnostic(
                    'COUNT', 'vertex {} previsited twice'.format(v)))
            path.append(v)
        elif kind is EventKind.POSTVISIT:
            post[v] += 1
            if not path or path[-1] != v:
                diags.append(Diagnostic(
                    'NESTING', 'event {}: postvisit of {} while {} is '
                    'current'.format(i, v, path[-1] if path else None)))
                if v in path:
                    path.remove(v)
            else:
                path.pop()
        else:
            if not 1 <= a <= g.m or tails[a] != v or g.tip[a] != w:
                diags.append(Diagnostic(
                    'PAIRING', 'event {}: arc {} is not ({}, {})'.format(
                        i, a, v, w)))
                previous = event
                continue
            if kind in (EventKind.TREE_ADVANCE, EventKind.NONTREE_TRAVERSE):
                advanced[a] += 1
                if not path or path[-1] != v:
                    diags.append(Diagnostic(
                        'NESTING', 'event {}: advance over arc {} while {} '
                        'is current'.format(i, a, path[-1] if path else None)))
                current[v] = a
            elif kind is EventKind.TREE_RETREAT:
                if (previous is None or previous.kind is not EventKind.POSTVISIT
                        or previous.v != w):
                    diags.append(Diagnostic(
                        'NESTING', 'event {}: tree retreat over arc {} does '
                        'not follow the postvisit of {}'.format(i, a, w)))
            else:
                retreated[a] += 1
                if not path or path[-1] != v or current.get(v) != a:
                    diags.append(Diagnostic(
                        'NESTING', 'event {}: retreat over arc {} out of '
                        'order'.format(i, a)))
        previous = event
    for v in path:
        diags.append(Diagnostic(
            'COUNT', 'vertex {} never postvisited'.format(v)))
    for v in range(1, g.n + 1):
        if pre[v] == 1 and post[v] == 0 and v not in path:
            diags.append(Diagnostic(
                'COUNT', 'vertex {} never postvisited'.format(v)))
        elif post[v] > 1:
            diags.append(Diagnostic(
                'COUNT', 'vertex {} postvisited {} times'.format(v, post[v])))
    for a in range(1, g.m + 1):
        expected = 1 if pre[tails[a]] else 0
        if advanced[a] != expected:
            diags.append(Diagnostic(
                'PAIRING', 'arc {} advanced {} times'.format(a, advanced[a])))
        if retreated[a] != expected:
            diags.append(Diagnostic(
                'PAIRING', 'arc {} retreated {} times'.format(
                    a, retreated[a])))
    return diags
