from collections import Counter

import pytest

from diamond_exact.exact import (ResolutionE, abelian_structure, admissible_class_dim, admissible_classes,
                                 coresolution_witness, dominant_dim_check, e_diamond, f_x, is_admissible,
                                 is_complete_rigid, is_maximal_rigid, is_rigid, is_tilting, oracle_structure, pd_e,
                                 relative_injectives, relative_injectives_by_ext, relative_pd,
                                 relative_proj_injectives, relative_projectives, relative_projectives_by_ext,
                                 split_structure, verify_dominant_witness, verify_resolution, zero_auslander_report)
from diamond_exact.grid import ext_class
from diamond_exact.quiver import ModuleSum, all_orientations, build_type_a, injective, projective

from conftest import iv

RLRR_BOUNDARY = {iv(1, 1), iv(1, 2), iv(2, 3), iv(3, 5), iv(4, 4), iv(5, 5)}


@pytest.fixture(scope="module")
def E(rlrr):
    return e_diamond(rlrr)


def test_diamond_generators(E):
    assert E.generators == RLRR_BOUNDARY
    assert E.is_diamond and E.label == "E_diamond"


def test_generators_small_and_linear():
    Q2 = build_type_a(2, "R")
    assert len(e_diamond(Q2).generators) == 3
    assert len(e_diamond(build_type_a(5, "RRRR")).generators) == 6


def test_admissibility(E, rlrr):
    P, I = (lambda i: projective(rlrr, i)), (lambda i: injective(rlrr, i))
    assert is_admissible(E, P(4), I(4))
    assert not is_admissible(E, iv(4, 4), I(3))
    with pytest.raises(ValueError):
        is_admissible(E, P(2), iv(2, 3))
    assert admissible_class_dim(E, I(4), P(4)) == 1
    assert admissible_class_dim(E, I(3), iv(4, 4)) == 0
    assert all(admissible_class_dim(E, m, m) == 0 for m in E.grid.modules())


def test_abelian_structure_admits_everything(rlrr):
    F = abelian_structure(rlrr)
    g = F.grid
    for quot in g.modules():
        for sub in g.modules():
            assert admissible_class_dim(F, quot, sub) == (ext_class(g, quot, sub) is not None)


def test_admissible_classes_are_diamonds(E):
    classes = admissible_classes(E)
    assert classes and all(c.kind.value == "Diamond" for c in classes)


def test_relative_projectives(E, rlrr):
    rp = relative_projectives(E)
    assert len(rp) == 9
    assert rp == RLRR_BOUNDARY | {projective(rlrr, i) for i in rlrr.vertices}
    assert relative_proj_injectives(E) == RLRR_BOUNDARY
    assert rp == relative_projectives_by_ext(E)
    assert relative_injectives(E) == relative_injectives_by_ext(E)


def test_abelian_relative_projectives(rlrr):
    F = abelian_structure(rlrr)
    assert relative_projectives(F) == {projective(rlrr, i) for i in rlrr.vertices}


def test_pd_e(E, rlrr):
    d, res = pd_e(E, injective(rlrr, 3))
    assert d == 1 and res.method == "diamond"
    (step,) = res.steps
    assert step.cover.summands == (iv(2, 3), iv(3, 5)) and step.kernel.summands == (iv(2, 5),)
    assert pd_e(E, projective(rlrr, 2))[0] == 0
    d, res = pd_e(E, iv(1, 5))
    assert d == 1 and res.method == "augmented"
    # the cover P(3) + P(1) + P(1) + P(5)
    assert res.steps[0].cover.summands == (iv(1, 2), iv(1, 2), iv(2, 5), iv(5, 5))
    assert verify_resolution(E, res)


def test_pd_e_requires_diamond(rlrr):
    with pytest.raises(ValueError):
        pd_e(abelian_structure(rlrr), iv(3, 3))


def test_resolution_printer(E, rlrr):
    _, res = pd_e(E, injective(rlrr, 3))
    assert str(res) == "0 -> [2,5] -> [2,3] + [3,5] -> [3,3] -> 0"
    assert str(ResolutionE(ModuleSum.of([iv(1, 1)]), ())) == "0 -> [1,1] -> [1,1] -> 0"
    assert res.to_json()["length"] == 1


def test_dominant_witnesses(E, rlrr):
    ok, ws = dominant_dim_check(E)
    assert ok
    w4 = next(w for w in ws if w.module == projective(rlrr, 4))
    assert w4.middle.summands == (injective(rlrr, 5), iv(4, 4))
    assert w4.cokernel.summands == (injective(rlrr, 4),)
    for w in ws:
        if w.module in RLRR_BOUNDARY:
            assert w.middle.summands == (w.module,) and not w.cokernel.summands
        assert verify_dominant_witness(E, w)


def test_dominant_witness_linear():
    Q = build_type_a(5, "RRRR")
    _, ws = dominant_dim_check(e_diamond(Q))
    w = next(w for w in ws if w.module == projective(Q, 3))
    assert w.cokernel.summands == (injective(Q, 3),)


def test_zero_auslander_reports(rlrr):
    rep = zero_auslander_report(e_diamond(rlrr))
    assert rep.global_dim == 1 and rep.is_0_auslander
    assert rep.to_json()["relative_proj_injectives"] == sorted(m.to_json() for m in RLRR_BOUNDARY)
    split = zero_auslander_report(split_structure(rlrr))
    assert split.global_dim == 0 and split.is_0_auslander
    # every sequence admissible: hereditary, but RLRR has dominant dimension 0
    ab = zero_auslander_report(abelian_structure(rlrr))
    assert ab.global_dim == 1 and not ab.dominant_dim_ok
    assert zero_auslander_report(abelian_structure(build_type_a(4, "RRR"))).is_0_auslander


@pytest.mark.parametrize("n", [3, 4, 5])
def test_diamond_is_zero_auslander(n):
    for Q in all_orientations(n):
        rep = zero_auslander_report(e_diamond(Q))
        assert rep.is_0_auslander
        assert rep.relative_proj_injectives == rep.relative_projectives & rep.relative_injectives


def test_lattice_minimum_is_tilting(E, rlrr):
    T = ModuleSum.of(RLRR_BOUNDARY | {projective(rlrr, i) for i in rlrr.vertices})
    assert len(T.summands) == 9
    assert is_rigid(E, T) and is_tilting(E, T) and is_maximal_rigid(E, T) and is_complete_rigid(E, T)


def test_single_module_not_complete(E):
    assert not is_complete_rigid(E, [iv(3, 3)])
    assert not is_tilting(E, [iv(3, 3)])


def test_non_basic_rejected(E):
    with pytest.raises(ValueError):
        is_rigid(E, ModuleSum.of([iv(1, 1), iv(1, 1)]))
    with pytest.raises(ValueError):
        is_rigid(E, [iv(1, 1), iv(1, 1)])


def test_coresolution_uses_hammock(E, rlrr):
    T = RLRR_BOUNDARY | {injective(rlrr, 4), iv(2, 4), iv(3, 3)}
    ok, mid, cok = coresolution_witness(E, T, projective(rlrr, 4))
    assert ok and cok.summands == (injective(rlrr, 4),)


def test_custom_structure_oracle_pd(rlrr):
    F = f_x(rlrr, [iv(3, 3)])
    assert relative_projectives(F) == {iv(3, 3)} | {projective(rlrr, i) for i in rlrr.vertices}
    assert relative_pd(F, iv(3, 3)) == 0
    assert relative_projectives_by_ext(F) == relative_projectives(F)


def test_oracle_admissibility_agrees(E):
    rel = oracle_structure(E)
    cat = rel.catalog
    for c in admissible_classes(E):
        assert rel.is_admissible(cat.realize(c.quot, c.sub))
        assert Counter(cat.decompose(cat.realize(c.quot, c.sub).middle)) == Counter(c.middle.summands)
