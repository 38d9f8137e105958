import networkx as nx
import pytest

from diamond_exact.checks import catalan
from diamond_exact.exact import e_diamond
from diamond_exact.grid import SesKind
from diamond_exact.mar import (Direction, NonMutableError, check_lattice, conflict_graph, enumerate_mar,
                               is_almost_rigid, lattice_extremes_ok, mar_poset, mutate, mutation_graph,
                               polygon_flip_graph, verify_bijection)
from diamond_exact.quiver import (MarDomainError, ModuleSum, all_orientations, build_type_a, injective,
                                  projective)

from conftest import iv


@pytest.fixture(scope="module")
def minimum(rlrr):
    E = e_diamond(rlrr)
    return ModuleSum.of(E.generators | {projective(rlrr, i) for i in rlrr.vertices})


def test_conflict_graph(rlrr):
    cg = conflict_graph(rlrr)
    assert frozenset((projective(rlrr, 4), injective(rlrr, 4))) in cg.edges
    assert frozenset((iv(4, 4), injective(rlrr, 3))) not in cg.edges
    for m in e_diamond(rlrr).generators:
        assert not cg.neighbours(m)
    assert cg.to_networkx().number_of_edges() == len(cg.edges)


def test_conflict_graph_domain():
    with pytest.raises(MarDomainError):
        conflict_graph(build_type_a(2, "R"))


@pytest.mark.parametrize("n, count", [(3, 2), (4, 5), (5, 14)])
def test_mar_counts(n, count):
    for Q in all_orientations(n):
        mars = enumerate_mar(Q)
        assert len(mars) == count
        assert all(len(T.summands) == 2 * n - 1 for T in mars)


def test_minimum_is_mar(rlrr, minimum):
    assert minimum in enumerate_mar(rlrr)
    assert is_almost_rigid(rlrr, minimum)


def test_mutate_running_example(rlrr, minimum):
    res = mutate(rlrr, minimum, projective(rlrr, 4))
    # I(4) conflicts with P(3), which stays; the unique partner is [2,4]
    assert res.added == iv(2, 4)
    assert res.direction is Direction.UP
    assert res.ses.kind is SesKind.DIAMOND
    assert res.ses.middle.summands == (iv(2, 5), iv(4, 4))
    assert res.result in enumerate_mar(rlrr)
    back = mutate(rlrr, res.result, res.added)
    assert back.added == projective(rlrr, 4) and back.result == minimum
    assert back.direction is Direction.DOWN


def test_mutate_errors(rlrr, minimum):
    with pytest.raises(NonMutableError):
        mutate(rlrr, minimum, iv(1, 1))
    with pytest.raises(ValueError):
        mutate(rlrr, minimum, iv(3, 3))


def test_exchange_middles_have_two_summands(rlrr):
    for T in enumerate_mar(rlrr):
        for X in T:
            if X in e_diamond(rlrr).generators:
                continue
            assert len(mutate(rlrr, T, X).ses.middle.summands) == 2


@pytest.mark.parametrize("word", ["RR", "RL", "LR", "LL"])
def test_n3_hasse(word):
    p = mar_poset(build_type_a(3, word))
    assert len(p.elements) == 2 and len(p.hasse_edges) == 1
    dot = p.to_dot()
    assert dot.count("->") == 1


@pytest.mark.parametrize("Q", all_orientations(4), ids=lambda q: q.orientation)
def test_n4_pentagon(Q):
    p = mar_poset(Q)
    assert len(p.elements) == 5 and len(p.hasse_edges) == 5 and p.is_lattice
    g = mutation_graph(Q)
    assert nx.is_isomorphic(g, nx.cycle_graph(5))


def test_extremes(rlrr, minimum):
    p = mar_poset(rlrr)
    assert p.elements[p.minimum] == minimum
    assert lattice_extremes_ok(rlrr, p) == (True, True)
    assert all(injective(rlrr, i) in p.elements[p.maximum] for i in rlrr.vertices)


def test_mutation_graph_regular(rlrr):
    g = mutation_graph(rlrr)
    assert nx.is_connected(g)
    assert set(dict(g.degree).values()) == {rlrr.n - 2}


def test_check_lattice_detects_non_lattice():
    # two minimal elements below two maximal ones: no meets
    assert not check_lattice(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert check_lattice(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def test_flip_graphs():
    g4 = polygon_flip_graph(4)
    assert g4.number_of_nodes() == 2 and g4.number_of_edges() == 1
    g6 = polygon_flip_graph(6)
    assert g6.number_of_nodes() == 14 and set(dict(g6.degree).values()) == {3}
    for m in range(4, 9):
        assert polygon_flip_graph(m).number_of_nodes() == catalan(m - 2)
    with pytest.raises(ValueError):
        polygon_flip_graph(3)


def test_bijection(rlrr):
    res = verify_bijection(rlrr)
    assert res.ok and res.mar_count == res.triangulation_count == 14
    js = res.to_json(mar_poset(rlrr).elements)
    assert len(js["certificate"]) == 14
    assert all(len(c["triangulation"]) == 3 for c in js["certificate"])
