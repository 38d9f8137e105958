"""Relative exact structures F_X computed by linear algebra over a module catalog.

The class is agnostic to the algebra: it needs a catalog of indecomposables,
the keys of the projectives and injectives, and tau on non-projectives.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import linalg as la
from .algebra import MatrixRep, Morphism, compose, direct_sum, flatten, hstack_maps, kernel, cokernel, vstack_maps
from .catalog import KnitResult, ModuleCatalog
from .homological import ExplicitSes, hom_space


class ResolutionOverflow(RuntimeError):
    pass


@dataclass
class ResolutionStep:
    """``0 -> kernel -> cover -> image -> 0`` with ``cover`` relatively projective."""
    image: Counter
    cover: Counter
    kernel: Counter
    ses: ExplicitSes = field(repr=False)


@dataclass
class Approximation:
    source: MatrixRep
    target: MatrixRep
    summands: list
    map: Morphism = field(repr=False)


@dataclass
class LeftWitness:
    """Outcome of testing ``0 -> P -> B -> coker -> 0`` from a left approximation."""
    module: object
    middle: Counter
    cokernel: Counter
    mono: bool
    admissible: bool
    cokernel_ok: bool

    @property
    def ok(self) -> bool:
        return self.mono and self.admissible and self.cokernel_ok


class RelativeStructure:
    def __init__(self, catalog: ModuleCatalog, generators, projectives, injectives, tau: dict):
        self.catalog = catalog
        self.generators = catalog.sort(set(generators))
        self.projectives = catalog.sort(set(projectives))
        self.injectives = catalog.sort(set(injectives))
        self.tau = dict(tau)
        self._left_cache: dict = {}

    @classmethod
    def from_knit(cls, kr: KnitResult, generators) -> "RelativeStructure":
        return cls(kr.catalog, generators, kr.projectives.values(), kr.injectives.values(), kr.tau)

    # relative projectives and injectives

    @property
    def relative_projectives(self) -> tuple:
        return self.catalog.sort(set(self.generators) | set(self.projectives))

    @property
    def relative_injectives(self) -> tuple:
        taus = {self.tau[x] for x in self.generators if x in self.tau}
        return self.catalog.sort(taus | set(self.injectives))

    @property
    def proj_inj(self) -> tuple:
        return self.catalog.sort(set(self.relative_projectives) & set(self.relative_injectives))

    def class_dim(self, quot, sub) -> int:
        """dim F_X(quot, sub)."""
        return self.catalog.relative_ext_dim(quot, sub, self.generators)

    def projectives_by_ext(self) -> tuple:
        keys = self.catalog.keys
        return self.catalog.sort(p for p in keys if all(self.class_dim(p, y) == 0 for y in keys))

    def injectives_by_ext(self) -> tuple:
        keys = self.catalog.keys
        return self.catalog.sort(i for i in keys if all(self.class_dim(y, i) == 0 for y in keys))

    # admissibility of explicit sequences

    def failing_generators(self, B: MatrixRep, C: MatrixRep, g: Morphism) -> list:
        """Generators X for which Hom(X, g): Hom(X, B) -> Hom(X, C) is not onto."""
        F = C.field
        bad = []
        for x in self.generators:
            X = self.catalog.rep(x)
            want = self.catalog.hom_dim_into(x, C)
            if want == 0:
                continue
            imgs = [flatten(compose(F, g, h)) for h in hom_space(X, B).basis]
            got = la.rank(F, F.matrix(imgs)) if imgs and imgs[0] else 0
            if got != want:
                bad.append(x)
        return bad

    def is_admissible(self, ses: ExplicitSes) -> bool:
        return ses.is_exact() and not self.failing_generators(ses.middle, ses.quot, ses.p)

    # approximations

    def right_approximation(self, M: MatrixRep, keys) -> Approximation:
        """``sum X -> M`` using every basis map X -> M for X in ``keys``."""
        F = M.field
        reps, maps, used = [], [], []
        for k in keys:
            for f in hom_space(self.catalog.rep(k), M).basis:
                reps.append(self.catalog.rep(k))
                maps.append(f)
                used.append(k)
        B = direct_sum(reps, M.quiver, F)
        g = hstack_maps(F, maps, M) if maps else tuple(F.zeros(M.dims[i], 0) for i in range(M.quiver.n))
        return Approximation(B, M, used, g)

    def left_approximation(self, M: MatrixRep, keys, source_key=None) -> Approximation:
        """``M -> sum Y`` using every basis map M -> Y for Y in ``keys``."""
        F = M.field
        reps, maps, used = [], [], []
        for k in keys:
            hs = self.catalog.hom(source_key, k) if source_key is not None else hom_space(M, self.catalog.rep(k))
            for f in hs.basis:
                reps.append(self.catalog.rep(k))
                maps.append(f)
                used.append(k)
        B = direct_sum(reps, M.quiver, F)
        f = vstack_maps(F, maps, M) if maps else tuple(F.zeros(0, M.dims[i]) for i in range(M.quiver.n))
        return Approximation(M, B, used, f)

    # projective dimension

    def resolution(self, M: MatrixRep, cap: int = 8) -> list[ResolutionStep]:
        relproj = set(self.relative_projectives)
        steps = []
        cur = M
        for _ in range(cap):
            if cur.total_dim == 0:
                return steps
            parts = self.catalog.decompose(cur)
            if set(parts) <= relproj:
                return steps
            ap = self.right_approximation(cur, self.relative_projectives)
            K, inc = kernel(ap.source, cur, ap.map)
            kparts = self.catalog.decompose(K) if K.total_dim else Counter()
            steps.append(ResolutionStep(parts, Counter(ap.summands), kparts,
                                        ExplicitSes(K, ap.source, cur, inc, ap.map)))
            cur = K
        raise ResolutionOverflow(f"no relative projective resolution within {cap} steps")

    def pd(self, key) -> int:
        return len(self.resolution(self.catalog.rep(key)))

    def global_dim(self) -> int:
        return max(self.pd(k) for k in self.catalog.keys)

    # left approximation tests: dominant dimension and tilting

    def left_test(self, key, targets, allowed) -> LeftWitness:
        cache_key = (key, targets, allowed)
        if cache_key in self._left_cache:
            return self._left_cache[cache_key]
        P = self.catalog.rep(key)
        ap = self.left_approximation(P, targets, source_key=key)
        F = P.field
        mono = all(la.rank(F, ap.map[i]) == P.dims[i] for i in range(P.quiver.n))
        C, q, _ = cokernel(P, ap.target, ap.map)
        coker = self.catalog.decompose(C) if C.total_dim else Counter()
        admissible = mono and not self.failing_generators(ap.target, C, q)
        w = LeftWitness(key, Counter(ap.summands), coker, mono, admissible, set(coker) <= set(allowed))
        self._left_cache[cache_key] = w
        return w

    def dominant_witnesses(self) -> list[LeftWitness]:
        """One left add(proj-inj) approximation test per relative projective."""
        pi = self.proj_inj
        out = []
        for p in self.relative_projectives:
            if p in pi:
                out.append(LeftWitness(p, Counter([p]), Counter(), True, True, True))
            else:
                targets = tuple(y for y in pi if self.catalog.hom_dim(p, y))
                out.append(self.left_test(p, targets, frozenset(self.relative_injectives)))
        return out

    def dominant_dim_ok(self) -> bool:
        return all(w.ok for w in self.dominant_witnesses())

    def is_zero_auslander(self) -> bool:
        return self.global_dim() <= 1 and self.dominant_dim_ok()

    # rigidity and tilting

    def is_rigid(self, keys) -> bool:
        keys = list(keys)
        return all(self.class_dim(a, b) == 0 for a in keys for b in keys)

    def tilting_witnesses(self, keys) -> list[LeftWitness]:
        T = self.catalog.sort(set(keys))
        out = []
        for p in self.relative_projectives:
            if p in T:
                out.append(LeftWitness(p, Counter([p]), Counter(), True, True, True))
            else:
                targets = tuple(y for y in T if self.catalog.hom_dim(p, y))
                out.append(self.left_test(p, targets, frozenset(T)))
        return out

    def is_tilting(self, keys) -> bool:
        keys = set(keys)
        if not self.is_rigid(keys):
            return False
        if any(self.pd(k) > 1 for k in keys):
            return False
        return all(w.ok for w in self.tilting_witnesses(keys))

    def is_maximal_rigid(self, keys) -> bool:
        keys = set(keys)
        if not self.is_rigid(keys):
            return False
        return not any(self.is_rigid(keys | {y}) for y in self.catalog.keys if y not in keys)

    def is_complete_rigid(self, keys) -> bool:
        keys = set(keys)
        return self.is_rigid(keys) and len(keys) == len(self.relative_projectives)
