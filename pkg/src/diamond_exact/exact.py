"""Relative exact structures F_X on type A module categories, and the diamond structure.

Admissibility of a class with indecomposable end terms is a coordinate test.
Anything involving decomposable end terms goes through the linear-algebra
oracle in :mod:`diamond_exact.oracle.relative`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .grid import ARGrid, SesClass, build_ar_grid, end_of_ray, ext_class, hom_dim, meet, projective_hammock
from .quiver import Interval, ModuleSum, TypeAQuiver, injective, list_indecomposables, projective, top
from .oracle.algebra import hstack_maps, direct_sum, kernel
from .oracle.homological import ExplicitSes
from .oracle.relative import RelativeStructure
from .oracle.typea import interval_catalog


@lru_cache(maxsize=256)
def grid_for(Q: TypeAQuiver) -> ARGrid:
    return build_ar_grid(Q)


@dataclass(frozen=True)
class ExactStructure:
    quiver: TypeAQuiver
    generators: frozenset
    label: str = "F_X"

    @property
    def grid(self) -> ARGrid:
        return grid_for(self.quiver)

    @property
    def is_diamond(self) -> bool:
        return self.generators == self.grid.boundary

    def to_json(self) -> dict:
        return {"quiver": self.quiver.to_json(), "label": self.label,
                "generators": [m.to_json() for m in sorted(self.generators)]}


def f_x(Q: TypeAQuiver, generators: Iterable[Interval], label: str = "F_X") -> ExactStructure:
    gens = frozenset(generators)
    for m in gens:
        Q.check_interval(m)
    return ExactStructure(Q, gens, label)


def e_diamond(Q: TypeAQuiver) -> ExactStructure:
    return ExactStructure(Q, grid_for(Q).boundary, "E_diamond")


def abelian_structure(Q: TypeAQuiver) -> ExactStructure:
    """F with no generators: every short exact sequence."""
    return ExactStructure(Q, frozenset(), "F_empty")


def split_structure(Q: TypeAQuiver) -> ExactStructure:
    """F generated by every indecomposable: only split sequences."""
    return ExactStructure(Q, frozenset(list_indecomposables(Q)), "F_all")


@lru_cache(maxsize=256)
def oracle_structure(ES: ExactStructure) -> RelativeStructure:
    Q = ES.quiver
    return RelativeStructure(interval_catalog(Q), ES.generators,
                             [projective(Q, i) for i in Q.vertices],
                             [injective(Q, i) for i in Q.vertices], ES.grid.tau_map)


# admissibility

def is_admissible(ES: ExactStructure, sub: Interval, quot: Interval) -> bool:
    """Whether the nonsplit class in Ext^1(quot, sub) lies in ES."""
    g = ES.grid
    ses = ext_class(g, quot, sub)
    if ses is None:
        raise ValueError(f"Ext^1({quot!r}, {sub!r}) = 0; only split classes exist")
    for x in ES.generators:
        if hom_dim(g, x, quot) and not any(hom_dim(g, x, e) for e in ses.middle):
            return False
    return True


def admissible_class_dim(ES: ExactStructure, quot: Interval, sub: Interval) -> int:
    if ext_class(ES.grid, quot, sub) is None:
        return 0
    return 1 if is_admissible(ES, sub, quot) else 0


def admissible_classes(ES: ExactStructure) -> list[SesClass]:
    g = ES.grid
    out = []
    for quot in g.modules():
        for sub in g.modules():
            if admissible_class_dim(ES, quot, sub):
                out.append(ext_class(g, quot, sub))
    return out


# relative projectives and injectives

def relative_projectives(ES: ExactStructure) -> frozenset:
    return ES.generators | frozenset(ES.grid.projectives)


def relative_injectives(ES: ExactStructure) -> frozenset:
    taus = {ES.grid.tau_map[x] for x in ES.generators if x in ES.grid.tau_map}
    return frozenset(taus) | frozenset(ES.grid.injectives)


def relative_proj_injectives(ES: ExactStructure) -> frozenset:
    return relative_projectives(ES) & relative_injectives(ES)


def relative_projectives_by_ext(ES: ExactStructure) -> frozenset:
    mods = ES.grid.modules()
    return frozenset(p for p in mods if all(admissible_class_dim(ES, p, y) == 0 for y in mods))


def relative_injectives_by_ext(ES: ExactStructure) -> frozenset:
    mods = ES.grid.modules()
    return frozenset(i for i in mods if all(admissible_class_dim(ES, y, i) == 0 for y in mods))


# resolutions

@dataclass(frozen=True)
class ResolutionStepE:
    """``0 -> kernel -> cover -> image -> 0``."""
    kernel: ModuleSum
    cover: ModuleSum
    image: ModuleSum

    def to_json(self) -> dict:
        return {"kernel": self.kernel.to_json(), "cover": self.cover.to_json(), "image": self.image.to_json()}


@dataclass(frozen=True)
class ResolutionE:
    target: ModuleSum
    steps: tuple
    method: str = "trivial"

    @property
    def length(self) -> int:
        return len(self.steps)

    def to_json(self) -> dict:
        return {"target": self.target.to_json(), "length": self.length, "method": self.method,
                "steps": [s.to_json() for s in self.steps]}

    def __str__(self) -> str:
        if not self.steps:
            return f"0 -> {self.target!r} -> {self.target!r} -> 0"
        s = self.steps[0]
        return f"0 -> {s.kernel!r} -> {s.cover!r} -> {s.image!r} -> 0"


def _require_diamond(ES: ExactStructure) -> None:
    if not ES.is_diamond:
        raise ValueError("the constructive resolution is only available for the diamond structure")


def _augmented_cover(Q: TypeAQuiver, M: Interval, e1: Interval, e2: Interval):
    """The cover P(M) + E1 + E2 -> M with its kernel, computed by the oracle."""
    cat = interval_catalog(Q)
    cover = [projective(Q, v) for v in top(Q, M)] + [e1, e2]
    Mrep = cat.rep(M)
    maps = []
    for c in cover:
        basis = cat.hom(c, M).basis
        if len(basis) != 1:
            raise RuntimeError(f"expected a one-dimensional Hom({c!r}, {M!r})")
        maps.append(basis[0])
    B = direct_sum([cat.rep(c) for c in cover], cat.quiver, cat.field)
    g = hstack_maps(cat.field, maps, Mrep)
    K, inc = kernel(B, Mrep, g)
    parts = cat.decompose(K) if K.total_dim else Counter()
    return cover, ExplicitSes(K, B, Mrep, inc, g), parts


def pd_e(ES: ExactStructure, M: Interval) -> tuple[int, ResolutionE]:
    """Relative projective dimension of ``M`` for the diamond structure, with a resolution."""
    _require_diamond(ES)
    g = ES.grid
    g.position(M)
    target = ModuleSum.of([M])
    if M in relative_projectives(ES):
        return 0, ResolutionE(target, ())
    e1 = end_of_ray(g, M, "SW")
    e2 = end_of_ray(g, M, "NW")
    n = meet(g, e1, "NW", e2, "SW")
    if n is not None:
        step = ResolutionStepE(ModuleSum.of([n]), ModuleSum.of([e1, e2]), target)
        return 1, ResolutionE(target, (step,), "diamond")
    cover, _, parts = _augmented_cover(ES.quiver, M, e1, e2)
    step = ResolutionStepE(ModuleSum.of(parts.elements()), ModuleSum.of(cover), target)
    return 1, ResolutionE(target, (step,), "augmented")


def relative_pd(ES: ExactStructure, M: Interval) -> int:
    """Relative projective dimension for any F_X, computed by the oracle."""
    return oracle_structure(ES).pd(M)


def verify_resolution(ES: ExactStructure, res: ResolutionE) -> bool:
    """Rebuild each step by linear algebra and confirm exactness, admissibility and projectivity."""
    rel = oracle_structure(ES)
    cat = rel.catalog
    relproj = relative_projectives(ES)
    if not res.steps:
        return all(m in relproj for m in res.target)
    for step in res.steps:
        if not all(m in relproj for m in step.cover) or not all(m in relproj for m in step.kernel):
            return False
        if len(step.image.summands) != 1:
            return False
        (M,) = step.image.summands
        if res.method == "diamond":
            (N,) = step.kernel.summands
            if cat.ext_dim(M, N) != 1:
                return False
            ses = cat.realize(M, N)
            if Counter(cat.decompose(ses.middle)) != Counter(step.cover.summands):
                return False
        else:
            cover, ses, parts = _augmented_cover(ES.quiver, M, end_of_ray(ES.grid, M, "SW"),
                                                 end_of_ray(ES.grid, M, "NW"))
            if Counter(cover) != Counter(step.cover.summands) or parts != Counter(step.kernel.summands):
                return False
        if not rel.is_admissible(ses):
            return False
    return True


# dominant dimension

@dataclass(frozen=True)
class DominantWitness:
    module: Interval
    middle: ModuleSum
    cokernel: ModuleSum
    ok: bool

    def to_json(self) -> dict:
        return {"module": self.module.to_json(), "middle": self.middle.to_json(),
                "cokernel": self.cokernel.to_json(), "ok": self.ok}


def dominant_dim_check(ES: ExactStructure) -> tuple[bool, list[DominantWitness]]:
    """For each relative projective P, an admissible ``0 -> P -> Q -> I -> 0`` as in dominant dimension 1."""
    pi = relative_proj_injectives(ES)
    ri = relative_injectives(ES)
    out = []
    if ES.is_diamond:
        g = ES.grid
        for p in sorted(relative_projectives(ES)):
            if p in pi:
                out.append(DominantWitness(p, ModuleSum.of([p]), ModuleSum.of([]), True))
                continue
            i = next(v for v in ES.quiver.vertices if projective(ES.quiver, v) == p)
            e1, e2, ses = projective_hammock(g, i)
            ok = (ses is not None and e1 in pi and e2 in pi and ses.quot in ri
                  and is_admissible(ES, ses.sub, ses.quot))
            out.append(DominantWitness(p, ses.middle, ModuleSum.of([ses.quot]), ok))
    else:
        for w in oracle_structure(ES).dominant_witnesses():
            out.append(DominantWitness(w.module, ModuleSum.of(w.middle.elements()),
                                       ModuleSum.of(w.cokernel.elements()), w.ok))
    return all(w.ok for w in out), out


def verify_dominant_witness(ES: ExactStructure, w: DominantWitness) -> bool:
    """Rebuild a witness sequence by linear algebra and test it."""
    rel = oracle_structure(ES)
    cat = rel.catalog
    pi, ri = relative_proj_injectives(ES), relative_injectives(ES)
    if not all(m in pi for m in w.middle) or not all(m in ri for m in w.cokernel):
        return False
    if not w.cokernel.summands:
        return w.middle.summands == (w.module,)
    (I,) = w.cokernel.summands
    if cat.ext_dim(I, w.module) != 1:
        return False
    ses = cat.realize(I, w.module)
    return (Counter(cat.decompose(ses.middle)) == Counter(w.middle.summands)
            and rel.is_admissible(ses))


# 0-Auslander

@dataclass(frozen=True)
class AuslanderReport:
    relative_projectives: frozenset
    relative_injectives: frozenset
    relative_proj_injectives: frozenset
    global_dim: int
    dominant_dim_ok: bool
    is_0_auslander: bool
    resolutions: tuple = ()
    witnesses: tuple = ()

    def to_json(self) -> dict:
        enc = lambda s: [m.to_json() for m in sorted(s)]
        return {
            "relative_projectives": enc(self.relative_projectives),
            "relative_injectives": enc(self.relative_injectives),
            "relative_proj_injectives": enc(self.relative_proj_injectives),
            "global_dim": self.global_dim,
            "dominant_dim_ok": self.dominant_dim_ok,
            "is_0_auslander": self.is_0_auslander,
        }


def zero_auslander_report(ES: ExactStructure) -> AuslanderReport:
    mods = ES.grid.modules()
    if ES.is_diamond:
        resolutions = tuple(pd_e(ES, m)[1] for m in mods)
        gd = max(r.length for r in resolutions)
    else:
        resolutions = ()
        gd = max(relative_pd(ES, m) for m in mods)
    dom_ok, witnesses = dominant_dim_check(ES)
    return AuslanderReport(relative_projectives(ES), relative_injectives(ES), relative_proj_injectives(ES),
                           gd, dom_ok, gd <= 1 and dom_ok, resolutions, tuple(witnesses))


# rigidity and tilting

def _summands(T) -> frozenset:
    if isinstance(T, ModuleSum):
        if not T.basic:
            raise ValueError(f"{T!r} is not basic")
        return frozenset(T.summands)
    items = list(T)
    if len(set(items)) != len(items):
        raise ValueError("module is not basic")
    return frozenset(items)


def is_rigid(ES: ExactStructure, T) -> bool:
    ts = _summands(T)
    return all(admissible_class_dim(ES, a, b) == 0 for a in ts for b in ts)


def _pd(ES: ExactStructure, m: Interval) -> int:
    return pd_e(ES, m)[0] if ES.is_diamond else relative_pd(ES, m)


def coresolution_witness(ES: ExactStructure, T, p: Interval) -> tuple[bool, ModuleSum, ModuleSum]:
    """Look for an admissible ``0 -> p -> T1 -> T2 -> 0`` with T1, T2 in add T (T rigid)."""
    ts = _summands(T)
    if p in ts:
        return True, ModuleSum.of([p]), ModuleSum.of([])
    if ES.is_diamond and p in ES.grid.projectives and p not in ES.grid.boundary:
        i = next(v for v in ES.quiver.vertices if projective(ES.quiver, v) == p)
        e1, e2, ses = projective_hammock(ES.grid, i)
        if ses is not None and {e1, e2, ses.quot} <= ts:
            return True, ses.middle, ModuleSum.of([ses.quot])
    rel = oracle_structure(ES)
    targets = tuple(y for y in sorted(ts) if hom_dim(ES.grid, p, y))
    w = rel.left_test(p, targets, frozenset(ts))
    return w.ok, ModuleSum.of(w.middle.elements()), ModuleSum.of(w.cokernel.elements())


def is_tilting(ES: ExactStructure, T) -> bool:
    ts = _summands(T)
    if not is_rigid(ES, ts):
        return False
    if any(_pd(ES, m) > 1 for m in ts):
        return False
    return all(coresolution_witness(ES, ts, p)[0] for p in sorted(relative_projectives(ES)))


def is_maximal_rigid(ES: ExactStructure, T) -> bool:
    ts = _summands(T)
    if not is_rigid(ES, ts):
        return False
    for y in ES.grid.modules():
        if y in ts:
            continue
        if all(admissible_class_dim(ES, y, t) == 0 and admissible_class_dim(ES, t, y) == 0 for t in ts):
            return False
    return True


def is_complete_rigid(ES: ExactStructure, T) -> bool:
    ts = _summands(T)
    return is_rigid(ES, ts) and len(ts) == len(relative_projectives(ES))
