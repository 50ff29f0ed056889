import types

import hypothesis
import pytest

import scckit.errors
import scckit.graph
from scckit.graph import NONE

from graphstrategies import arc_lists, graphs


def test_build_triangle(triangle):
    assert triangle.n == 3
    assert triangle.m == 3
    assert triangle.first == (NONE, 1, 2, 3)
    assert triangle.tip == (NONE, 2, 3, 1)
    assert triangle.next == (NONE, NONE, NONE, NONE)


def test_build_outlist_order():
    g = scckit.graph.build_graph(3, [(1, 2), (2, 3), (1, 3), (1, 1)])
    assert list(g.out(1)) == [1, 3, 4]
    assert list(g.out(2)) == [2]
    assert list(g.out(3)) == []
    assert g.tails() == [NONE, 1, 2, 1, 1]


def test_build_empty():
    g = scckit.graph.build_graph(0, [])
    assert (g.n, g.m) == (0, 0)
    assert g.first == (NONE,)


def test_build_isolated():
    g = scckit.graph.build_graph(4, [])
    assert g.first == (NONE,) * 5
    assert list(g.arcs()) == []


@pytest.mark.parametrize('n, arcs', [
    (-1, []),
    (2, [(1, 3)]),
    (2, [(0, 1)]),
    (0, [(1, 1)]),
])
def test_build_out_of_range(n, arcs):
    with pytest.raises(scckit.errors.OutOfRangeError):
        scckit.graph.build_graph(n, arcs)


def test_immutable(triangle):
    with pytest.raises(AttributeError):
        triangle.extra = 1       # pylint: disable=assigning-non-slot
    with pytest.raises(TypeError):
        triangle.tip[1] = 3      # pylint: disable=unsupported-assignment-operation


def test_equality(triangle):
    again = scckit.graph.build_graph(3, [(1, 2), (2, 3), (3, 1)])
    assert again == triangle
    assert hash(again) == hash(triangle)
    assert again != scckit.graph.build_graph(3, [(2, 3), (1, 2), (3, 1)])


def test_reverse(one_arc):
    rg = scckit.graph.reverse_graph(one_arc)
    assert list(rg.arcs()) == [(2, 1)]
    assert rg.first == (NONE, NONE, 1)


@hypothesis.given(arc_lists())
def test_arcs_keep_ids(data):
    n, arcs = data
    g = scckit.graph.build_graph(n, arcs)
    assert list(g.arcs()) == list(arcs)
    assert scckit.graph.validate_graph(g) == []


@hypothesis.given(graphs())
def test_reverse_twice(g):
    rg = scckit.graph.reverse_graph(g)
    assert scckit.graph.validate_graph(rg) == []
    assert scckit.graph.reverse_graph(rg) == g


@hypothesis.given(graphs())
def test_text_form(g):
    assert scckit.graph.parse_graph(scckit.graph.serialize_graph(g)) == g


class TestParse:

    def test_triangle(self, triangle):
        text = '# a triangle\n3 3\n1 2\n\n2 3\n   3 1  \n'
        assert scckit.graph.parse_graph(text) == triangle

    def test_serialize(self, triangle):
        assert (scckit.graph.serialize_graph(triangle) ==
                '3 3\n1 2\n2 3\n3 1\n')

    def test_empty_graph(self):
        g = scckit.graph.parse_graph('0 0\n')
        assert (g.n, g.m) == (0, 0)

    def test_missing_header(self):
        with pytest.raises(scckit.errors.ParseError):
            scckit.graph.parse_graph('# nothing here\n\n')

    @pytest.mark.parametrize('text, lineno', [
        ('3\n', 1),
        ('3 x\n', 1),
        ('-1 0\n', 1),
        ('2 1\n1\n', 2),
        ('2 1\n1 2 3\n', 2),
        ('# c\n2 1\n1 two\n', 3),
        ('2 1\n1 2\n2 1\n', 3),
    ])
    def test_bad_line(self, text, lineno):
        with pytest.raises(scckit.errors.ParseError) as excinfo:
            scckit.graph.parse_graph(text)
        assert excinfo.value.lineno == lineno
        assert str(excinfo.value).startswith('line {}: '.format(lineno))

    def test_too_few_arcs(self):
        with pytest.raises(scckit.errors.ParseError) as excinfo:
            scckit.graph.parse_graph('2 2\n1 2\n')
        assert str(excinfo.value) == 'expected 2 arc lines, found 1'

    def test_vertex_out_of_range(self):
        with pytest.raises(scckit.errors.OutOfRangeError) as excinfo:
            scckit.graph.parse_graph('2 1\n1 3\n')
        assert excinfo.value.lineno == 2
        assert str(excinfo.value) == 'line 2: vertex 3 outside 1..2'
        assert excinfo.value.exit_status == 2


class TestValidate:

    def fake(self, n, m, first, tip, nxt):
        return types.SimpleNamespace(n=n, m=m, first=first, tip=tip,
                                     next=nxt)

    def test_valid(self, two_cycles):
        assert scckit.graph.validate_graph(two_cycles) == []

    def test_negative(self):
        diags = scckit.graph.validate_graph(self.fake(-1, 0, [], [], []))
        assert [d.code for d in diags] == ['INVALID_GRAPH']

    def test_lengths(self):
        diags = scckit.graph.validate_graph(
            self.fake(2, 1, [0, 1], [0, 2], [0, 0]))
        assert diags == [scckit.graph.Diagnostic(
            'INVALID_GRAPH', 'first has 2 slots, expected 3')]

    def test_tip_out_of_range(self):
        diags = scckit.graph.validate_graph(
            self.fake(2, 1, [0, 1, 0], [0, 3], [0, 0]))
        assert diags == [scckit.graph.Diagnostic(
            'OUT_OF_RANGE', 'arc 1 has tip 3 outside 1..2')]

    def test_cycle_in_outlist(self):
        diags = scckit.graph.validate_graph(
            self.fake(1, 2, [0, 1], [0, 1, 1], [0, 2, 1]))
        assert ('INVALID_GRAPH', 'out-list of vertex 1 revisits arc 1'
                ) in diags

    def test_shared_arc(self):
        diags = scckit.graph.validate_graph(
            self.fake(2, 1, [0, 1, 1], [0, 1], [0, 0]))
        assert diags == [scckit.graph.Diagnostic(
            'INVALID_GRAPH', 'arc 1 is on the out-lists of vertices 1 and 2')]

    def test_orphan_arc(self):
        diags = scckit.graph.validate_graph(
            self.fake(2, 2, [0, 1, 0], [0, 2, 1], [0, 0, 0]))
        assert diags == [scckit.graph.Diagnostic(
            'INVALID_GRAPH', 'arc 2 is on no out-list')]
