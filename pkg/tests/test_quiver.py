import itertools

import pytest

from diamond_exact.quiver import (Interval, MarDomainError, ModuleSum, QuiverError, all_orientations, build_type_a,
                                  dimension_vector, injective, list_indecomposables, projective, radical_name,
                                  simple, top)

from conftest import iv


def test_build_running_example(rlrr):
    assert str(rlrr) == "1->2<-3->4->5"
    assert rlrr.to_json() == {"n": 5, "orientation": "RLRR"}


def test_smallest_quiver():
    assert str(build_type_a(2, "R")) == "1->2"


@pytest.mark.parametrize("n, word", [(5, "RLR"), (1, ""), (3, "RX"), (3, "RRR")])
def test_invalid_quivers(n, word):
    with pytest.raises(QuiverError):
        build_type_a(n, word)


def test_projectives_and_injectives(rlrr):
    assert projective(rlrr, 3) == iv(2, 5)
    assert projective(rlrr, 4) == iv(4, 5)
    assert injective(rlrr, 2) == iv(1, 3)
    assert injective(rlrr, 5) == iv(3, 5)
    assert simple(rlrr, 4) == iv(4, 4)


def test_linear_projective_is_everything():
    Q = build_type_a(6, "RRRRR")
    assert projective(Q, 1) == iv(1, 6)
    assert injective(Q, 6) == iv(1, 6)


def test_vertex_out_of_range(rlrr):
    with pytest.raises(QuiverError):
        projective(rlrr, 6)
    with pytest.raises(QuiverError):
        injective(rlrr, 0)


@pytest.mark.parametrize("n, count", [(2, 3), (5, 15), (7, 28)])
def test_indecomposable_count(n, count):
    mods = list_indecomposables(build_type_a(n, "R" * (n - 1)))
    assert len(mods) == count
    assert mods == sorted(mods)


def test_n2_intervals():
    assert list_indecomposables(build_type_a(2, "L")) == [iv(1, 1), iv(1, 2), iv(2, 2)]


def test_radical_names_match_figure(rlrr):
    assert radical_name(rlrr, iv(2, 5)) == "3/24/5"
    assert radical_name(rlrr, iv(1, 3)) == "13/2"
    assert radical_name(rlrr, iv(4, 5)) == "4/5"
    assert top(rlrr, iv(1, 5)) == [1, 3]


def test_dimension_vector(rlrr):
    assert dimension_vector(rlrr, iv(2, 4)) == (0, 1, 1, 1, 0)


def test_interval_validation():
    with pytest.raises(QuiverError):
        Interval(3, 2)
    with pytest.raises(QuiverError):
        build_type_a(3, "RR").check_interval(iv(2, 4))


def test_module_sum_is_sorted_and_basic():
    s = ModuleSum.of([iv(3, 3), iv(1, 2), iv(3, 3)])
    assert s.summands == (iv(1, 2), iv(3, 3), iv(3, 3))
    assert not s.basic
    assert len(s) == 2
    assert s.to_json() == [[1, 2], [3, 3], [3, 3]]
    assert repr(ModuleSum.of([])) == "0"


def test_mar_domain():
    with pytest.raises(MarDomainError):
        build_type_a(2, "R").require_mar_domain()
    build_type_a(3, "RL").require_mar_domain()


@pytest.mark.parametrize("n", range(2, 7))
def test_projectives_distinct_and_contain_vertex(n):
    for Q in all_orientations(n):
        ps = [projective(Q, i) for i in Q.vertices]
        js = [injective(Q, i) for i in Q.vertices]
        assert len(set(ps)) == n and len(set(js)) == n
        assert all(i in ps[i - 1] and i in js[i - 1] for i in Q.vertices)
        for p, j in itertools.product(ps, js):
            if p == j:
                assert p == Interval(1, n)


def test_all_orientations_count():
    assert len(all_orientations(6)) == 32
