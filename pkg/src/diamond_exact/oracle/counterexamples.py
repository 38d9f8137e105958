"""Checks on a D4 quiver and on a gentle algebra where the type A picture breaks down."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .algebra import BoundQuiver, hstack_maps, kernel
from .catalog import KnitResult, knit
from .homological import ExplicitSes, projective_points, pushout, realize_combination
from .linalg import QQ, PrimeField
from .relative import RelativeStructure

# dimension vector -> radical-layer name, vertices 1..4 with 2 the branch point
NAMES = {
    (0, 0, 1, 0): "3", (0, 0, 0, 1): "4", (0, 1, 0, 0): "2", (1, 0, 0, 0): "1",
    (0, 1, 1, 1): "2/34", (0, 1, 0, 1): "2/4", (0, 1, 1, 0): "2/3", (1, 1, 0, 0): "1/2",
    (1, 1, 1, 1): "1/2/34", (1, 1, 1, 0): "1/2/3", (1, 1, 0, 1): "1/2/4", (1, 2, 1, 1): "1/22/34",
}

D4_X = ["3", "2/34", "4", "2/4", "2/3", "1/2/34", "1/2/3", "1/2/4", "2", "1"]
D4_T = D4_X + ["1/2"]
GENTLE_X = ["3", "4", "2/34", "1/2/4", "2/4", "2/3", "1"]
GENTLE_PROJ_INJ = ["3", "4", "2/3", "1/2/4", "1"]

# exhaustive class enumeration over a prime field; the special points of each
# projective line of classes are rational, so F_7 sees every middle-term type
ENUM_FIELD = PrimeField(7)


def _name(dims, _k):
    return NAMES[tuple(dims)]


def d4_quiver() -> BoundQuiver:
    return BoundQuiver(4, ((1, 2), (2, 3), (2, 4)), arrow_names=("alpha", "beta", "gamma"))


def gentle_quiver() -> BoundQuiver:
    return BoundQuiver(4, ((1, 2), (2, 3), (2, 4)), relations=((0, 1),), arrow_names=("alpha", "beta", "gamma"))


@lru_cache(maxsize=8)
def d4_knit(F=QQ) -> KnitResult:
    return knit(d4_quiver(), F, namer=_name)


@lru_cache(maxsize=8)
def gentle_knit(F=QQ) -> KnitResult:
    return knit(gentle_quiver(), F, namer=_name)


def _check(name: str, passed: bool, **witness) -> dict:
    return {"check": name, "passed": bool(passed), "witness": witness}


def _counts(c: Counter) -> dict:
    return dict(sorted(c.items()))


def explicit_cover(kr: KnitResult, cover: list, target) -> ExplicitSes:
    """``0 -> K -> sum(cover) -> target`` built from one-dimensional Hom spaces."""
    cat = kr.catalog
    M = cat.rep(target)
    maps = []
    for c in cover:
        basis = cat.hom(c, target).basis
        if len(basis) != 1:
            raise ValueError(f"Hom({c}, {target}) has dimension {len(basis)}")
        maps.append(basis[0])
    B = cat.sum_rep(cover)
    g = hstack_maps(cat.field, maps, M)
    K, inc = kernel(B, M, g)
    return ExplicitSes(K, B, M, inc, g)


def all_class_middles(kr: KnitResult, quot, sub, generators=None) -> list[Counter]:
    """Middle terms of every nonsplit class (of F_X if ``generators`` is given) up to scalars."""
    cat = kr.catalog
    ext = cat.ext(quot, sub)
    if ext.dim == 0:
        return []
    basis = ext.classes if generators is None else cat.relative_ext_basis(quot, sub, tuple(generators))
    out = []
    for coeffs in projective_points(cat.field, len(basis)):
        ses = realize_combination(cat.rep(quot), cat.rep(sub), basis, coeffs, ext)
        out.append(cat.decompose(ses.middle))
    return out


def _summand_count(c: Counter) -> int:
    return sum(c.values())


def _almost_rigid(kr: KnitResult, keys, bad_middle) -> tuple[bool, list]:
    offenders = []
    for a in keys:
        for c in keys:
            for mid in all_class_middles(kr, c, a):
                if bad_middle(mid):
                    offenders.append({"sub": a, "quot": c, "middle": _counts(mid)})
    return not offenders, offenders


def _maximal_almost_rigid(kr: KnitResult, keys, bad_middle) -> tuple[bool, list, list]:
    ok, offenders = _almost_rigid(kr, keys, bad_middle)
    extendable = []
    for y in kr.catalog.keys:
        if y in keys:
            continue
        if _almost_rigid(kr, list(keys) + [y], bad_middle)[0]:
            extendable.append(y)
    return ok and not extendable, offenders, extendable


def verify_d4_example() -> dict:
    kr = d4_knit()
    cat = kr.catalog
    R = RelativeStructure.from_knit(kr, D4_X)
    checks = []

    dims = sorted(cat.rep(k).dims for k in cat.keys)
    checks.append(_check("twelve indecomposables", len(cat) == 12 and set(dims) == set(NAMES),
                         modules=list(cat.keys)))

    xi_ext = cat.ext_dim("1/2/4", "2/34")
    xi = cat.realize("1/2/4", "2/34")
    xi_mid = cat.decompose(xi.middle)
    checks.append(_check("xi is a diamond sequence",
                         xi_ext == 1 and xi.is_exact() and xi_mid == Counter({"2/4": 1, "1/2/34": 1}),
                         ext_dim=xi_ext, middle=_counts(xi_mid)))

    f = cat.hom("2/34", "2/3").basis
    po = pushout(xi, cat.rep("2/3"), f[0]) if len(f) == 1 else None
    po_mid = cat.decompose(po.middle) if po else Counter()
    checks.append(_check("pushout of xi has indecomposable middle",
                         po is not None and po.is_exact() and po_mid == Counter({"1/22/34": 1})
                         and po.middle.dims == (1, 2, 1, 1),
                         middle=_counts(po_mid), dims=list(po.middle.dims) if po else None))

    ar = []
    for x, mids, y, ses in kr.ar_sequences:
        ar.append({"sub": x, "middle": list(mids), "quot": y, "admissible": R.is_admissible(ses)})
    triple = [s for s in ar if len(s["middle"]) == 3]
    others = [s for s in ar if len(s["middle"]) != 3]
    checks.append(_check("AR sequences with three middle terms are admissible",
                         len(triple) == 2 and all(s["admissible"] for s in triple)
                         and {s["quot"] for s in triple} == {"1/22/34", "1/2"},
                         sequences=triple))
    checks.append(_check("no other AR sequence is admissible",
                         not any(s["admissible"] for s in others), sequences=others))

    step1 = explicit_cover(kr, ["1/2/3", "2", "1/2/4"], "1/2")
    k1 = cat.decompose(step1.sub)
    step2 = explicit_cover(kr, ["2/4", "1/2/34", "2/3"], "1/22/34")
    k2 = cat.decompose(step2.sub)
    displayed = (k1 == Counter({"1/22/34": 1}) and k2 == Counter({"2/34": 1})
                 and R.is_admissible(step1) and R.is_admissible(step2))
    pd = R.pd("1/2")
    checks.append(_check("pd of 1/2 is two via the displayed resolution", displayed and pd == 2,
                         first_kernel=_counts(k1), second_kernel=_counts(k2), pd=pd))

    gd = R.global_dim()
    dom = R.dominant_dim_ok()
    checks.append(_check("not 0-Auslander", not (gd <= 1 and dom), global_dim=gd, dominant_dim_ok=dom))

    kr7 = d4_knit(ENUM_FIELD)
    three = lambda mid: _summand_count(mid) == 3
    mar, offenders, extendable = _maximal_almost_rigid(kr7, D4_T, three)
    checks.append(_check("eleven-summand module is maximal almost rigid with three middle terms",
                         mar and len(D4_T) == 11, offenders=offenders, extendable=extendable))
    tilting = R.is_tilting(D4_T)
    checks.append(_check("eleven-summand module is not tilting", not tilting and R.pd("1/2") == 2,
                         rigid=R.is_rigid(D4_T), is_tilting=tilting))
    return {"schema": 1, "example": "D4", "passed": all(c["passed"] for c in checks), "checks": checks}


def verify_gentle_example() -> dict:
    kr = gentle_knit()
    cat = kr.catalog
    R = RelativeStructure.from_knit(kr, GENTLE_X)
    checks = []

    checks.append(_check("nine indecomposables", len(cat) == 9, modules=list(cat.keys)))

    kr7 = gentle_knit(ENUM_FIELD)
    decomposable_middle = lambda mid: _summand_count(mid) > 1
    mar, offenders, extendable = _maximal_almost_rigid(kr7, GENTLE_X, decomposable_middle)
    checks.append(_check("sum of X is maximal almost rigid", mar, offenders=offenders, extendable=extendable))

    bad = []
    for c in kr7.catalog.keys:
        for a in kr7.catalog.keys:
            for mid in all_class_middles(kr7, c, a, GENTLE_X):
                if _summand_count(mid) == 1:
                    bad.append({"sub": a, "quot": c, "middle": _counts(mid)})
    checks.append(_check("admissible sequences have decomposable middle", not bad, offenders=bad))

    res = {}
    for target, cover in (("2", ["2/4", "2/3"]), ("1/2", ["1/2/4", "2/3"])):
        ses = explicit_cover(kr, cover, target)
        k = cat.decompose(ses.sub)
        res[target] = {"kernel": _counts(k), "admissible": R.is_admissible(ses), "pd": R.pd(target)}
    pds = {k: R.pd(k) for k in cat.keys}
    ok = (all(r["kernel"] == {"2/34": 1} and r["admissible"] and r["pd"] == 1 for r in res.values())
          and {k for k, d in pds.items() if d} == {"2", "1/2"} and max(pds.values()) == 1)
    checks.append(_check("displayed resolutions are admissible of length one", ok, resolutions=res, pd=pds))

    pi = R.proj_inj
    checks.append(_check("relative proj-injectives are the five listed modules",
                         set(pi) == set(GENTLE_PROJ_INJ), proj_inj=list(pi)))

    seq = cat.realize("1", "2/4")
    mid = cat.decompose(seq.middle)
    failing = R.failing_generators(seq.middle, seq.quot, seq.p)
    checks.append(_check("0 -> 2/4 -> 1/2/4 -> 1 -> 0 is not admissible",
                         mid == Counter({"1/2/4": 1}) and "1" in failing and not R.is_admissible(seq),
                         middle=_counts(mid), failing_generators=failing))

    dom = R.dominant_dim_ok()
    gd = R.global_dim()
    checks.append(_check("not 0-Auslander", gd == 1 and not dom, global_dim=gd, dominant_dim_ok=dom,
                         witnesses=[{"module": w.module, "middle": _counts(w.middle),
                                     "cokernel": _counts(w.cokernel), "ok": w.ok}
                                    for w in R.dominant_witnesses()]))
    return {"schema": 1, "example": "gentle", "passed": all(c["passed"] for c in checks), "checks": checks}
