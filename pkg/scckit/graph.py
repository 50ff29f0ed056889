"""Directed graphs stored as endogenous linked lists of arcs.

A graph with ``n`` vertices and ``m`` arcs is held in three arrays.
``first`` is indexed by vertex and names the first arc of the vertex's
out-list.  ``tip`` and ``next`` are indexed by arc and give the arc's
head and the following arc on the same out-list.  Vertices are the
integers ``1..n`` and arcs the integers ``1..m``; :data:`NONE` (0) is
the null link, so slot 0 of every array is unused.

Graphs are read-only once built.  Loops and parallel arcs are
allowed and kept as given.

The text format is a header line ``n m`` followed by exactly ``m``
lines ``tail head``.  Lines starting with ``#`` and blank lines are
skipped::

    # a triangle
    3 3
    1 2
    2 3
    3 1

"""

import collections

import logbook

import scckit.errors


log = logbook.Logger(__name__)


#: The null vertex and the null arc.
NONE = 0


Diagnostic = collections.namedtuple('Diagnostic', ['code', 'message'])


class Graph:
    """An immutable directed graph.

    Attributes:

    :n: Number of vertices.
    :m: Number of arcs.
    :first: Tuple of length n+1, the first arc out of each vertex.
    :tip: Tuple of length m+1, the head of each arc.
    :next: Tuple of length m+1, the next arc on the same out-list.

    Use :func:`build_graph` rather than creating instances directly,
    the constructor only converts its arguments to tuples and does
    not check them (see :func:`validate_graph`).

    """

    __slots__ = ('n', 'm', 'first', 'tip', 'next')

    def __init__(self, n, m, first, tip, next):  # pylint: disable=redefined-builtin
        self.n = n
        self.m = m
        self.first = tuple(first)
        self.tip = tuple(tip)
        self.next = tuple(next)

    def __repr__(self):
        return '<Graph n={} m={}>'.format(self.n, self.m)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.m == other.m
                and self.first == other.first
                and self.tip == other.tip
                and self.next == other.next)

    def __hash__(self):
        return hash((self.n, self.m, self.first, self.tip, self.next))

    def out(self, v):
        """Yield the arcs out of vertex v in out-list order."""
        a = self.first[v]
        while a != NONE:
            yield a
            a = self.next[a]

    def tails(self):
        """Return a list mapping every arc to its tail.

        Slot 0 holds :data:`NONE`.  Computed by walking all out-lists.
        """
        tails = [NONE] * (self.m + 1)
        for v in range(1, self.n + 1):
            for a in self.out(v):
                tails[a] = v
        return tails

    def arcs(self):
        """Yield ``(tail, head)`` for every arc in arc id order."""
        tails = self.tails()
        for a in range(1, self.m + 1):
            yield tails[a], self.tip[a]


def build_graph(n, arcs):
    """Build a graph from an ordered sequence of arcs.

    Arc ids are assigned in the order given and every out-list keeps
    that order.

    :param n: The number of vertices.
    :param arcs: Iterable of ``(tail, head)`` pairs, 1-based.

    :raises scckit.errors.OutOfRangeError: If n is negative or an
       endpoint lies outside 1..n.

    """
    if n < 0:
        raise scckit.errors.OutOfRangeError(
            'negative vertex count: {}'.format(n))
    first = [NONE] * (n + 1)
    last = [NONE] * (n + 1)
    tip = [NONE]
    nxt = [NONE]
    for a, (tail, head) in enumerate(arcs, start=1):
        if not (1 <= tail <= n and 1 <= head <= n):
            raise scckit.errors.OutOfRangeError(
                'arc {} ({} -> {}) has an endpoint outside 1..{}'.format(
                    a, tail, head, n))
        tip.append(head)
        nxt.append(NONE)
        if last[tail] == NONE:
            first[tail] = a
        else:
            nxt[last[tail]] = a
        last[tail] = a
    return Graph(n, len(tip) - 1, first, tip, nxt)


def reverse_graph(g):
    """Return the graph with every arc of g reversed.

    Arc k of the result is arc k of g with its ends swapped, so the
    out-lists of the result are in ascending original arc id.
    """
    return build_graph(g.n, ((head, tail) for tail, head in g.arcs()))


def _numbers(line, lineno, what):
    fields = line.split()
    if len(fields) != 2:
        raise scckit.errors.ParseError(
            'expected two integers for {}, got {!r}'.format(what, line),
            lineno)
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise scckit.errors.ParseError(
            'expected two integers for {}, got {!r}'.format(what, line),
            lineno) from None


def parse_graph(text):
    """Parse the edge-list text format into a :class:`Graph`.

    :raises scckit.errors.ParseError: For malformed lines, a missing
       header or the wrong number of arc lines.  The error carries the
       1-based physical line number where one applies.
    :raises scckit.errors.OutOfRangeError: For an arc endpoint outside
       1..n, naming the line.

    """
    header = None
    arcs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if header is None:
            header = _numbers(line, lineno, 'the "n m" header')
            if header[0] < 0 or header[1] < 0:
                raise scckit.errors.ParseError(
                    'negative count in header {!r}'.format(line), lineno)
            continue
        n, m = header
        if len(arcs) == m:
            raise scckit.errors.ParseError(
                'more than the {} declared arc lines'.format(m), lineno)
        tail, head = _numbers(line, lineno, 'an arc')
        for endpoint in (tail, head):
            if not 1 <= endpoint <= n:
                raise scckit.errors.OutOfRangeError(
                    'vertex {} outside 1..{}'.format(endpoint, n), lineno)
        arcs.append((tail, head))
    if header is None:
        raise scckit.errors.ParseError('missing "n m" header line')
    n, m = header
    if len(arcs) != m:
        raise scckit.errors.ParseError(
            'expected {} arc lines, found {}'.format(m, len(arcs)))
    g = build_graph(n, arcs)
    log.debug('Parsed graph with {} vertices and {} arcs', g.n, g.m)
    return g


def serialize_graph(g):
    """Return the edge-list text of g, arcs in arc id order."""
    lines = ['{} {}'.format(g.n, g.m)]
    lines.extend('{} {}'.format(tail, head) for tail, head in g.arcs())
    return '\n'.join(lines) + '\n'


def validate_graph(g):
    """Check candidate graph data against the graph invariants.

    ``g`` may be any object with ``n``, ``m``, ``first``, ``tip`` and
    ``next`` attributes, not only a :class:`Graph`.

    :returns: A list of :class:`Diagnostic` tuples, empty when all
       invariants hold.  Codes are ``INVALID_GRAPH`` for structural
       problems and ``OUT_OF_RANGE`` for ids outside their range.

    """
    diags = []
    n, m = g.n, g.m
    if n < 0 or m < 0:
        diags.append(Diagnostic(
            'INVALID_GRAPH', 'negative counts n={} m={}'.format(n, m)))
        return diags
    for name, array, size in [('first', g.first, n + 1),
                              ('tip', g.tip, m + 1),
                              ('next', g.next, m + 1)]:
        if len(array) != size:
            diags.append(Diagnostic(
                'INVALID_GRAPH', '{} has {} slots, expected {}'.format(
                    name, len(array), size)))
    if diags:
        return diags
    first, tip, nxt = g.first, g.tip, g.next
    for a in range(1, m + 1):
        if not 1 <= tip[a] <= n:
            diags.append(Diagnostic(
                'OUT_OF_RANGE',
                'arc {} has tip {} outside 1..{}'.format(a, tip[a], n)))
        if not 0 <= nxt[a] <= m:
            diags.append(Diagnostic(
                'OUT_OF_RANGE',
                'arc {} has next {} outside 0..{}'.format(a, nxt[a], m)))
    for v in range(1, n + 1):
        if not 0 <= first[v] <= m:
            diags.append(Diagnostic(
                'OUT_OF_RANGE',
                'vertex {} has first arc {} outside 0..{}'.format(
                    v, first[v], m)))
    owner = [NONE] * (m + 1)
    for v in range(1, n + 1):
        a = first[v]
        while 1 <= a <= m:
            if owner[a] == v:
                diags.append(Diagnostic(
                    'INVALID_GRAPH',
                    'out-list of vertex {} revisits arc {}'.format(v, a)))
                break
            if owner[a] != NONE:
                diags.append(Diagnostic(
                    'INVALID_GRAPH',
                    'arc {} is on the out-lists of vertices {} and {}'.format(
                        a, owner[a], v)))
                break
            owner[a] = v
            a = nxt[a]
    for a in range(1, m + 1):
        if owner[a] == NONE:
            diags.append(Diagnostic(
                'INVALID_GRAPH', 'arc {} is on no out-list'.format(a)))
    return diags
