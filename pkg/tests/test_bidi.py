import hypothesis
import pytest

import scckit.bidi
import scckit.counting
import scckit.graph
import scckit.tarjan
import scckit.testkit
from scckit.bidi import Backward
from scckit.components import OrderKind, WithinOrder
from scckit.dfs import EngineKind

from graphstrategies import graphs


ENGINES = list(EngineKind)

DEEP_SIZES = [50000, pytest.param(10 ** 6, marks=pytest.mark.slow)]


@pytest.mark.parametrize('engine', ENGINES)
@pytest.mark.parametrize('backward', list(Backward))
def test_triangle(triangle, engine, backward):
    scc = scckit.bidi.scc_bidirectional(triangle, engine=engine,
                                        backward=backward)
    assert scc.components == [[1, 3, 2]]
    assert scc.leader == [0, 1, 1, 1]
    assert scc.order_kind is OrderKind.TOPOLOGICAL
    assert scc.within_order is WithinOrder.VISIT


@pytest.mark.parametrize('engine', ENGINES)
@pytest.mark.parametrize('backward', list(Backward))
def test_two_cycles(two_cycles, engine, backward):
    scc = scckit.bidi.scc_bidirectional(two_cycles, engine=engine,
                                        backward=backward)
    assert scc.components == [[1, 2], [3, 4]]
    assert scc.leader == [0, 1, 1, 3, 3]


def test_one_arc(one_arc):
    scc = scckit.bidi.scc_bidirectional(one_arc)
    assert scc.components == [[1], [2]]


def test_empty():
    scc = scckit.bidi.scc_bidirectional(scckit.graph.build_graph(0, []))
    assert scc.components == []
    assert scc.leader == [0]


def test_given_reverse(two_cycles):
    g_rev = scckit.graph.reverse_graph(two_cycles)
    scc = scckit.bidi.scc_bidirectional(two_cycles, g_rev)
    assert scc.components == [[1, 2], [3, 4]]


def test_forward_reverse_postorder(two_cycles):
    assert (scckit.bidi.forward_reverse_postorder(two_cycles) ==
            [1, 2, 3, 4])


@pytest.mark.parametrize('engine', ENGINES)
def test_forward_stop_early(triangle, engine):
    # The unfinished path is postvisited deepest first.
    assert scckit.bidi.forward_reverse_postorder(
        triangle, engine, stop_early=True) == [1, 2, 3]


def test_searches(two_cycles):
    run = scckit.bidi.run_bidirectional(two_cycles, start_order=[3, 1, 2, 4])
    assert run.searches == 4
    assert run.result.components == [[1, 2], [3, 4]]


def test_corpus_matches_oracle(corpus):
    for spec, g in corpus:
        oracle = scckit.testkit.oracle_scc(g)
        for backward in Backward:
            for stop_early in (False, True):
                scc = scckit.bidi.scc_bidirectional(
                    g, stop_early=stop_early, backward=backward)
                assert scc.partition() == oracle.partition(), spec


def test_corpus_topological(corpus):
    for spec, g in corpus:
        index = scckit.bidi.scc_bidirectional(g).index()
        for x, y in g.arcs():
            assert index[x] <= index[y], spec


def test_corpus_leaders_start_searches(corpus):
    for spec, g in corpus:
        scc = scckit.bidi.scc_bidirectional(g)
        for members in scc.components:
            assert all(scc.leader[v] == members[0] for v in members), spec


@hypothesis.given(graphs())
def test_reverse_of_tarjan(g):
    tarjan = scckit.tarjan.scc_tarjan(g)
    for engine in ENGINES:
        scc = scckit.bidi.scc_bidirectional(g, engine=engine)
        assert ([set(members) for members in scc.components] ==
                [set(members) for members in reversed(tarjan.components)])


def test_forward_marks_cleared_once():
    memory = scckit.counting.CountingMemory()
    fwd = scckit.bidi.ForwardOrder(5, memory=memory)
    fwd.start(5)
    assert memory.writes == 5
    assert memory.tallies() == [scckit.counting.Tally('mark', 0, 5),
                                scckit.counting.Tally('order', 0, 0)]


@pytest.mark.parametrize('backward', list(Backward))
def test_backward_reuses_marks(two_cycles, backward):
    memory = scckit.counting.CountingMemory()
    run = scckit.bidi.run_bidirectional(two_cycles, backward=backward,
                                        memory=memory)
    assert run.result.components == [[1, 2], [3, 4]]
    tallies = {tally.name: tally for tally in memory.tallies()}
    assert 'leader' not in tallies
    # Cleared, marked visited, then assigned: once each per vertex.
    assert tallies['mark'].writes == 3 * two_cycles.n
    assert tallies['order'].writes == two_cycles.n


@pytest.mark.parametrize('n', DEEP_SIZES)
def test_deep_cycle(n):
    g = scckit.graph.build_graph(n, [(v, v + 1) for v in range(1, n)]
                                 + [(n, 1)])
    scc = scckit.bidi.scc_bidirectional(g, stop_early=True)
    assert len(scc.components) == 1
    assert scc.components[0][0] == 1
    assert sorted(scc.components[0]) == list(range(1, n + 1))
