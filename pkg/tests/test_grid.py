import pytest

from diamond_exact.grid import (PairKind, SesKind, build_ar_grid, classify_pair, diamond_capable, end_of_ray,
                                ext_class, hom_dim, meet, projective_hammock, ray, region_left, region_right, tau,
                                tau_inverse)
from diamond_exact.quiver import QuiverError, build_type_a, injective, projective

from conftest import iv


@pytest.fixture(scope="module")
def g(rlrr):
    return build_ar_grid(rlrr)


def _row(g, i):
    return sorted(g.row(i), key=lambda m: g.position(m).x)


def test_boundary_rows_match_figure(g, rlrr):
    assert _row(g, 5) == [projective(rlrr, 5), iv(4, 4), iv(2, 3), injective(rlrr, 1)]
    assert _row(g, 1) == [projective(rlrr, 1), injective(rlrr, 5)]


def test_linear_a3_grid():
    Q = build_type_a(3, "RR")
    g = build_ar_grid(Q)
    assert len(g.positions) == 6
    # rows are tau-orbits of P(i): the simples form the orbit of P(3) = [3,3]
    assert set(g.row(3)) == {iv(1, 1), iv(2, 2), iv(3, 3)}
    assert g.row(1) == (iv(1, 3),)


def test_x_normalized(g):
    assert min(p.x for p in g.positions.values()) == 0


def test_tau(g, rlrr):
    # knitting and the oracle's AR sequences agree: tau I(4) = [1,5]
    assert tau(g, injective(rlrr, 4)) == iv(1, 5)
    assert all(tau(g, projective(rlrr, i)) is None for i in rlrr.vertices)
    assert all(tau_inverse(g, injective(rlrr, i)) is None for i in rlrr.vertices)
    for m, t in g.tau_map.items():
        assert tau_inverse(g, t) == m
        assert g.position(m).x == g.position(t).x + 2


def test_unknown_interval(g):
    with pytest.raises(QuiverError):
        tau(g, iv(4, 7))


def test_rays(g, rlrr):
    assert ray(g, injective(rlrr, 5), "NE") == [iv(3, 5), iv(3, 4), iv(3, 3)]
    assert end_of_ray(g, iv(1, 5), "SW") == projective(rlrr, 1)
    assert end_of_ray(g, iv(1, 5), "NW") == projective(rlrr, 5)
    m = iv(2, 4)
    assert set(ray(g, m, "NE")) & set(ray(g, m, "SE")) == {m}
    with pytest.raises(ValueError):
        ray(g, m, "N")


def test_meet(g):
    assert meet(g, iv(4, 5), "NE", iv(3, 4), "NW") == iv(4, 4)
    assert meet(g, iv(1, 2), "SE", iv(5, 5), "SW") is None


def test_classify_pairs(g, rlrr):
    P, I = (lambda i: projective(rlrr, i)), (lambda i: injective(rlrr, i))
    assert classify_pair(g, P(2), iv(2, 3)).kind is PairKind.RECTANGULAR_DEGENERATE
    pc = classify_pair(g, P(4), I(4))
    assert pc.kind is PairKind.RECTANGULAR_NON_DEGENERATE
    assert (pc.e1, pc.e2) == (iv(4, 4), I(5))
    pc = classify_pair(g, iv(4, 4), I(3))
    assert pc.kind is PairKind.UPPER_DELETED and pc.e == I(4)


def test_hom(g, rlrr):
    assert hom_dim(g, projective(rlrr, 2), iv(2, 3)) == 1
    assert hom_dim(g, iv(4, 4), injective(rlrr, 3)) == 0
    assert all(hom_dim(g, m, m) == 1 for m in g.modules())


def test_ext_classes(g, rlrr):
    P, I = (lambda i: projective(rlrr, i)), (lambda i: injective(rlrr, i))
    d = ext_class(g, I(4), P(4))
    assert d.kind is SesKind.DIAMOND
    assert d.middle.summands == (I(5), iv(4, 4))
    assert str(d) == "0 -> [4,5] -> [3,5] + [4,4] -> [3,4] -> 0"
    e = ext_class(g, I(3), iv(4, 4))
    assert e.kind is SesKind.INDECOMPOSABLE_MIDDLE and e.middle.summands == (I(4),)
    assert ext_class(g, iv(2, 3), P(2)) is None


def test_regions(g, rlrr):
    I = lambda i: injective(rlrr, i)
    m = iv(1, 4)
    assert region_right(g, m) == {m, I(1), I(2), I(3), I(4)}
    r = region_right(g, projective(rlrr, 4))
    assert len(r) == 8 and r == region_left(g, I(4))
    assert I(2) in region_right(g, I(2))


def test_regions_equal_hom_support(g):
    for m in g.modules():
        assert region_right(g, m) == {n for n in g.modules() if hom_dim(g, m, n)}
        assert region_left(g, m) == {n for n in g.modules() if hom_dim(g, n, m)}


def test_diamond_capable(g, rlrr):
    assert diamond_capable(g, projective(rlrr, 3)) == (False, True)
    assert diamond_capable(g, iv(1, 4)) == (True, True)
    assert all(diamond_capable(g, m) == (False, False) for m in g.row(1))


def test_diamond_capable_matches_scan(g):
    mods = g.modules()
    for m in mods:
        as_quot = any(ext_class(g, m, n) is not None and ext_class(g, m, n).kind is SesKind.DIAMOND for n in mods)
        as_sub = any(ext_class(g, n, m) is not None and ext_class(g, n, m).kind is SesKind.DIAMOND for n in mods)
        assert diamond_capable(g, m) == (as_quot, as_sub)


def test_projective_hammock(g, rlrr):
    e1, e2, ses = projective_hammock(g, 4)
    assert (e1, e2) == (injective(rlrr, 5), iv(4, 4))
    assert ses.quot == injective(rlrr, 4)
    # corners of the P(3) rectangle, confirmed by the oracle
    e1, e2, ses = projective_hammock(g, 3)
    assert (e1, e2) == (iv(3, 5), iv(2, 3))
    assert ses.middle.summands == (iv(2, 3), iv(3, 5)) and ses.quot == iv(3, 3)
    e1, _, ses = projective_hammock(g, 1)
    assert e1 == projective(rlrr, 1) and ses is None
    with pytest.raises(QuiverError):
        projective_hammock(g, 0)


def test_json_and_dot(g):
    js = g.to_json()
    assert js["quiver"] == {"n": 5, "orientation": "RLRR"}
    assert len(js["positions"]) == 15
    dot = g.to_dot()
    assert dot.startswith("digraph AR {") and dot.count("->") == len(g.arrows) + len(g.tau_map)


def test_n2_grid():
    g = build_ar_grid(build_type_a(2, "R"))
    assert len(g.positions) == 3 and len(g.arrows) == 2
