import hypothesis
import pytest

import scckit.cycle
import scckit.dfs
import scckit.errors
import scckit.explorespec
import scckit.graph
import scckit.pm
import scckit.tarjan
import scckit.testkit
from scckit.components import OrderKind, WithinOrder
from scckit.cycle import CycleOptions
from scckit.dfs import EngineKind

from graphstrategies import graphs


ENGINES = list(EngineKind)

DEEP_SIZES = [50000, pytest.param(10 ** 6, marks=pytest.mark.slow)]


@pytest.mark.parametrize('engine', ENGINES)
@pytest.mark.parametrize('debug', [False, True])
def test_triangle(triangle, engine, debug):
    scc = scckit.cycle.scc_cycle(triangle,
                                 CycleOptions(engine=engine, debug=debug))
    assert scc.components == [[1, 2, 3]]
    assert scc.leader == [0, 1, 1, 1]
    assert scc.order_kind is OrderKind.REVERSE_TOPOLOGICAL
    assert scc.within_order is WithinOrder.PREORDER


@pytest.mark.parametrize('engine', ENGINES)
def test_two_cycles(two_cycles, engine):
    scc = scckit.cycle.scc_cycle(two_cycles, CycleOptions(engine=engine))
    assert scc.components == [[3, 4], [1, 2]]
    assert scc.leader == [0, 1, 1, 3, 3]


def test_one_arc(one_arc):
    scc = scckit.cycle.scc_cycle(one_arc)
    assert scc.components == [[2], [1]]


def test_empty():
    scc = scckit.cycle.scc_cycle(scckit.graph.build_graph(0, []))
    assert scc.components == []
    assert scc.leader == [0]


@pytest.mark.parametrize('engine', ENGINES)
def test_stop_early(triangle, engine):
    scc = scckit.cycle.scc_cycle(
        triangle, CycleOptions(engine=engine, stop_early=True))
    assert scc.components == [[1, 2, 3]]
    assert scc.leader == [0, 1, 1, 1]


def test_stop_early_trigger():
    algo = scckit.cycle.Cycle(4)
    algo.start(4)
    algo.search_start(1)
    algo.previsit(1)
    algo.previsit(2)
    algo.nontree_traverse(2, 2, 1)
    algo.previsit(3)
    assert not algo.stop_early_trigger()
    algo.previsit(4)
    assert not algo.stop_early_trigger()
    algo.nontree_traverse(4, 5, 3)
    assert algo.depth == 2
    assert not algo.stop_early_trigger()
    algo.postvisit(4)
    algo.postvisit(3)
    assert algo.depth == 1
    assert algo.stop_early_trigger()


def test_stop_early_debug(two_cycles):
    scc = scckit.cycle.scc_cycle(
        two_cycles, CycleOptions(engine=EngineKind.V_STACK, stop_early=True,
                                 debug=True))
    assert scc.components == [[3, 4], [1, 2]]


def test_arcstack_searches(two_cycles):
    run = scckit.cycle.run_arcstack(two_cycles, start_order=[3, 1, 2, 4])
    assert run.searches == 2
    assert run.result.components == [[3, 4], [1, 2]]


def test_arcstack_single_vertex():
    g = scckit.graph.build_graph(1, [])
    run = scckit.cycle.run_arcstack(g, stop_early=True)
    assert run.result.components == [[1]]
    assert run.searches == 1


class TestCheckedCycle:

    def test_wrong_oracle(self, two_cycles):
        # An oracle claiming 1 and 3 are mutually reachable.
        lying = scckit.testkit.OraclePartition([0, 1, 1, 1, 1])
        algo = scckit.cycle.CheckedCycle(two_cycles.n, lying)
        stubs = scckit.pm.bindstubs(scckit.explorespec, algo, skip=('halt',))
        with pytest.raises(scckit.errors.InternalInvariantError):
            scckit.dfs.run(two_cycles, stubs, EngineKind.V_STACK)

    def test_result_with_full_stacks(self, triangle):
        algo = scckit.cycle.Cycle(triangle.n)
        algo.ltop = 1
        with pytest.raises(scckit.errors.InternalInvariantError):
            algo.result()


def test_corpus_matches_oracle(corpus):
    for spec, g in corpus:
        oracle = scckit.testkit.oracle_scc(g)
        for stop_early in (False, True):
            scc = scckit.cycle.scc_cycle(g, CycleOptions(stop_early=stop_early))
            assert scc.partition() == oracle.partition(), (spec, stop_early)


@pytest.mark.parametrize('engine', ENGINES)
def test_corpus_debug(small_corpus, engine):
    for spec, g in small_corpus:
        expected = scckit.cycle.scc_cycle(g)
        scc = scckit.cycle.scc_cycle(g, CycleOptions(engine=engine,
                                                     debug=True))
        assert scc.components == expected.components, spec
        assert scc.leader == expected.leader, spec


def test_corpus_preorder_within(corpus):
    for spec, g in corpus:
        stamps = scckit.dfs.compute_pre_post(g)
        scc = scckit.cycle.scc_cycle(g)
        for members in scc.components:
            assert scc.leader[members[0]] == members[0], spec
            pres = [stamps.pre[v] for v in members]
            assert pres == sorted(pres), spec


def test_corpus_reverse_topological(corpus):
    for spec, g in corpus:
        index = scckit.cycle.scc_cycle(g).index()
        for x, y in g.arcs():
            assert index[x] >= index[y], spec


@hypothesis.given(graphs())
def test_same_as_tarjan(g):
    expected = scckit.tarjan.scc_tarjan(g)
    for stop_early in (False, True):
        scc = scckit.cycle.scc_cycle(g, CycleOptions(stop_early=stop_early))
        assert ([set(members) for members in scc.components] ==
                [set(members) for members in expected.components])
        assert scc.leader == expected.leader


@pytest.mark.parametrize('n', DEEP_SIZES)
def test_deep_cycle(n):
    g = scckit.graph.build_graph(n, [(v, v + 1) for v in range(1, n)]
                                 + [(n, 1)])
    scc = scckit.cycle.scc_cycle(g, CycleOptions(stop_early=True))
    assert scc.components == [list(range(1, n + 1))]
