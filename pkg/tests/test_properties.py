from collections import Counter

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import quiver_and_interval, quivers
from diamond_exact.checks import catalan
from diamond_exact.exact import admissible_class_dim, e_diamond, grid_for, is_rigid
from diamond_exact.grid import SesKind, ext_class, hom_dim, region_left, region_right, tau, tau_inverse
from diamond_exact.mar import conflict_graph, enumerate_mar, is_almost_rigid, mutate
from diamond_exact.oracle.algebra import type_a_quiver
from diamond_exact.oracle.homological import euler_form
from diamond_exact.oracle.typea import interval_catalog
from diamond_exact.quiver import dimension_vector

SETTINGS = settings(max_examples=60, deadline=None)


@st.composite
def quiver_and_pair(draw, min_n=2, max_n=6):
    Q = draw(quivers(min_n, max_n))
    mods = grid_for(Q).modules()
    return Q, draw(st.sampled_from(mods)), draw(st.sampled_from(mods))


@SETTINGS
@given(quiver_and_pair())
def test_euler_form_is_hom_minus_ext(qp):
    Q, m, n = qp
    g = grid_for(Q)
    ext = 0 if ext_class(g, m, n) is None else 1
    e = euler_form(type_a_quiver(Q.n, Q.orientation), dimension_vector(Q, m), dimension_vector(Q, n))
    assert hom_dim(g, m, n) - ext == e


@SETTINGS
@given(quiver_and_interval())
def test_regions_are_hom_supports(qm):
    Q, m = qm
    g = grid_for(Q)
    mods = g.modules()
    assert region_right(g, m) == {n for n in mods if hom_dim(g, m, n)}
    assert region_left(g, m) == {n for n in mods if hom_dim(g, n, m)}


@SETTINGS
@given(quiver_and_interval())
def test_tau_inverse_undoes_tau(qm):
    Q, m = qm
    g = grid_for(Q)
    t = tau(g, m)
    if t is not None:
        assert tau_inverse(g, t) == m
    s = tau_inverse(g, m)
    if s is not None:
        assert tau(g, s) == m


@SETTINGS
@given(quiver_and_pair())
def test_ext_class_dims_add_up(qp):
    Q, quot, sub = qp
    ses = ext_class(grid_for(Q), quot, sub)
    if ses is None:
        return
    total = [sum(col) for col in zip(*(dimension_vector(Q, x) for x in ses.middle.summands))]
    assert total == [a + b for a, b in zip(dimension_vector(Q, sub), dimension_vector(Q, quot))]


@settings(max_examples=40, deadline=None)
@given(quiver_and_pair(3, 5))
def test_diamond_iff_two_summands(qp):
    Q, quot, sub = qp
    ses = ext_class(grid_for(Q), quot, sub)
    adm = admissible_class_dim(e_diamond(Q), quot, sub)
    assert adm == int(ses is not None and ses.kind is SesKind.DIAMOND)
    cat = interval_catalog(Q)
    if cat.ext_dim(quot, sub):
        two = sum(cat.decompose(cat.realize(quot, sub).middle).values()) == 2
        assert adm == int(two)


@SETTINGS
@given(quivers(3, 6), st.data())
def test_mutation_is_an_involution(Q, data):
    T = data.draw(st.sampled_from(enumerate_mar(Q)))
    movable = sorted(set(T.summands) - grid_for(Q).boundary)
    X = data.draw(st.sampled_from(movable))
    res = mutate(Q, T, X)
    assert res.result in enumerate_mar(Q) and res.added not in T.summands
    back = mutate(Q, res.result, res.added)
    assert back.result == T and back.added == X


@settings(max_examples=30, deadline=None)
@given(quivers(3, 6))
def test_mar_sizes(Q):
    mars = enumerate_mar(Q)
    assert len(mars) == catalan(Q.n - 1)
    boundary = grid_for(Q).boundary
    for T in mars:
        assert len(T.summands) == 2 * Q.n - 1 and boundary <= set(T.summands)
        assert is_rigid(e_diamond(Q), T)


@SETTINGS
@given(quivers(3, 6), st.data())
def test_almost_rigid_means_no_diamond_between_summands(Q, data):
    g = grid_for(Q)
    mods = data.draw(st.sets(st.sampled_from(g.modules()), min_size=1, max_size=6))
    diamonds = any((s := ext_class(g, a, b)) is not None and s.kind is SesKind.DIAMOND
                   for a in mods for b in mods)
    assert is_almost_rigid(Q, mods) == (not diamonds)
    assert conflict_graph(Q).is_independent(mods) == (not diamonds)


@SETTINGS
@given(quiver_and_pair(2, 5))
def test_grid_hom_matches_oracle(qp):
    Q, m, n = qp
    assert hom_dim(grid_for(Q), m, n) == interval_catalog(Q).hom_dim(m, n)


@SETTINGS
@given(quiver_and_pair(2, 5))
def test_grid_ext_middle_matches_oracle(qp):
    Q, quot, sub = qp
    cat = interval_catalog(Q)
    ses = ext_class(grid_for(Q), quot, sub)
    assert cat.ext_dim(quot, sub) == (ses is not None)
    if ses is not None:
        assert cat.decompose(cat.realize(quot, sub).middle) == Counter(ses.middle.summands)
