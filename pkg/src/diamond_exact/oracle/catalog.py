"""Finite catalogs of indecomposables and module-level AR knitting."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import linalg as la
from .algebra import (
    BoundQuiver,
    MatrixRep,
    cokernel,
    direct_sum,
    injective,
    projective,
    vstack_maps,
)
from .homological import (
    ExplicitSes,
    ExtSpace,
    HomSpace,
    Presentation,
    decompose,
    ext_space,
    extension_realization,
    hom_dim,
    hom_space,
    is_brick,
    isomorphic_bricks,
    local_summands_of_radical,
    presentation,
    relative_ext_basis,
)
from .linalg import QQ


class ModuleCatalog:
    """Named indecomposable representations with cached Hom/Ext data."""

    def __init__(self, quiver: BoundQuiver, entries: list[tuple[object, MatrixRep]], field=QQ):
        self.quiver = quiver
        self.field = field
        self.keys = [k for k, _ in entries]
        self._reps = dict(entries)
        self._order = {k: i for i, k in enumerate(self.keys)}
        self._hom: dict = {}
        self._hom_dim: dict = {}
        self._ext: dict = {}
        self._pres: dict = {}
        self._rel: dict = {}

    def __len__(self) -> int:
        return len(self.keys)

    def __contains__(self, key) -> bool:
        return key in self._reps

    def rep(self, key) -> MatrixRep:
        return self._reps[key]

    def entries(self) -> list[tuple[object, MatrixRep]]:
        return [(k, self._reps[k]) for k in self.keys]

    def sort(self, keys) -> tuple:
        return tuple(sorted(keys, key=self._order.__getitem__))

    def hom(self, a, b) -> HomSpace:
        if (a, b) not in self._hom:
            self._hom[a, b] = hom_space(self._reps[a], self._reps[b])
        return self._hom[a, b]

    def hom_dim(self, a, b) -> int:
        if (a, b) not in self._hom_dim:
            if (a, b) in self._hom:
                self._hom_dim[a, b] = self._hom[a, b].dim
            else:
                self._hom_dim[a, b] = hom_dim(self._reps[a], self._reps[b])
        return self._hom_dim[a, b]

    def hom_dim_into(self, a, M: MatrixRep) -> int:
        return hom_dim(self._reps[a], M)

    def presentation(self, key) -> Presentation:
        if key not in self._pres:
            self._pres[key] = presentation(self._reps[key])
        return self._pres[key]

    def ext(self, quot, sub) -> ExtSpace:
        if (quot, sub) not in self._ext:
            self._ext[quot, sub] = ext_space(self._reps[quot], self._reps[sub], self.presentation(quot))
        return self._ext[quot, sub]

    def ext_dim(self, quot, sub) -> int:
        return self.ext(quot, sub).dim

    def realize(self, quot, sub, index: int | None = 0, coeffs=None) -> ExplicitSes:
        return extension_realization(self._reps[quot], self._reps[sub], index=index, coeffs=coeffs,
                                     ext=self.ext(quot, sub))

    def decompose(self, M: MatrixRep) -> Counter:
        return decompose(M, self.entries(), check_bricks=False)

    def decompose_sorted(self, M: MatrixRep) -> tuple:
        c = self.decompose(M)
        return self.sort(c.elements())

    def check_bricks(self) -> list:
        """Keys whose endomorphism algebra is not one-dimensional."""
        return [k for k in self.keys if not is_brick(self._reps[k])]

    def sum_rep(self, keys) -> MatrixRep:
        return direct_sum([self._reps[k] for k in keys], self.quiver, self.field)

    def relative_ext_basis(self, quot, sub, generators) -> list:
        gens = tuple(generators)
        key = (quot, sub, gens)
        if key not in self._rel:
            self._rel[key] = relative_ext_basis(self._reps[quot], self._reps[sub],
                                                [self._reps[g] for g in gens], ext=self.ext(quot, sub))
        return self._rel[key]

    def relative_ext_dim(self, quot, sub, generators) -> int:
        if self.ext_dim(quot, sub) == 0:
            return 0
        return len(self.relative_ext_basis(quot, sub, generators))

    def find(self, M: MatrixRep):
        """Key of the catalog entry isomorphic to the indecomposable ``M``, or None."""
        for k in self.keys:
            X = self._reps[k]
            if X.dims == M.dims and isomorphic_bricks(X, M):
                return k
        return None

    def projective_keys(self) -> dict[int, object]:
        return {v: self.find(projective(self.quiver, v, self.field)) for v in range(1, self.quiver.n + 1)}

    def injective_keys(self) -> dict[int, object]:
        return {v: self.find(injective(self.quiver, v, self.field)) for v in range(1, self.quiver.n + 1)}


@dataclass
class KnitResult:
    catalog: ModuleCatalog
    tau_inverse: dict
    arrows: set
    ar_sequences: list  # (tau X, middle keys, X, ExplicitSes)
    projectives: dict
    injectives: dict

    @property
    def tau(self) -> dict:
        return {v: k for k, v in self.tau_inverse.items()}


class KnittingError(RuntimeError):
    pass


def knit(Q: BoundQuiver, F=QQ, namer=None, limit: int = 500) -> KnitResult:
    """Build all indecomposables of a representation-directed monomial algebra.

    Starts from the projectives; the radical of each P(v) splits into the
    cyclic modules a.A.  Each non-injective X gets tau^-1 X as the cokernel of
    X -> (sum of its direct successors), every arrow component nonzero.
    """
    namer = namer or (lambda dims, k: f"M{k}")
    mods: list[tuple[object, MatrixRep]] = []
    preds: dict = {}
    tau_inv: dict = {}
    extra_succ: dict = {}
    arrows: set = set()
    sequences = []
    injs = [injective(Q, v, F) for v in range(1, Q.n + 1)]
    is_inj: dict = {}

    def add(M: MatrixRep):
        key = namer(M.dims, len(mods))
        if any(key == k for k, _ in mods):
            raise KnittingError(f"duplicate name {key!r}")
        M.name = key
        mods.append((key, M))
        is_inj[key] = any(I.dims == M.dims and isomorphic_bricks(I, M) for I in injs)
        return key

    def find(M: MatrixRep):
        for k, X in mods:
            if X.dims == M.dims and isomorphic_bricks(X, M):
                return k
        return None

    pending = []  # (projective key, radical summand rep)
    proj_keys = {}
    for v in range(1, Q.n + 1):
        proj_keys[v] = add(projective(Q, v, F))
    for v in range(1, Q.n + 1):
        P = dict(mods)[proj_keys[v]]
        preds[proj_keys[v]] = []
        for R in local_summands_of_radical(P, v):
            pending.append((proj_keys[v], R))

    def resolve_pending(key, M):
        still = []
        for pk, R in pending:
            if R.dims == M.dims and isomorphic_bricks(R, M):
                preds[pk].append(key)
                extra_succ.setdefault(key, []).append(pk)
                arrows.add((key, pk))
            else:
                still.append((pk, R))
        pending[:] = still

    for k, M in list(mods):
        resolve_pending(k, M)

    while len(mods) < limit:
        reps = dict(mods)
        waiting = {pk for pk, _ in pending}
        ready = None
        for k, X in mods:
            if is_inj[k] or k in tau_inv or k in waiting:
                continue
            if all(is_inj[z] or z in tau_inv for z in preds[k]):
                ready = k
                break
        if ready is None:
            break
        X = reps[ready]
        succ = [tau_inv[z] for z in preds[ready] if not is_inj[z]] + extra_succ.get(ready, [])
        if not succ:
            raise KnittingError(f"non-injective {ready!r} has no successors")
        comps = []
        for y in succ:
            H = hom_space(X, reps[y])
            if H.dim != 1:
                raise KnittingError(f"Hom({ready!r}, {y!r}) has dimension {H.dim}, expected 1")
            comps.append(H.basis[0])
        mid = direct_sum([reps[y] for y in succ], Q, F)
        f = vstack_maps(F, comps, X)
        if any(la.rank(F, f[i]) != X.dims[i] for i in range(Q.n)):
            raise KnittingError(f"left almost split map of {ready!r} is not injective")
        Y, q, _ = cokernel(X, mid, f)
        if find(Y) is not None:
            raise KnittingError(f"tau^-1 {ready!r} already present")
        ykey = add(Y)
        preds[ykey] = list(succ)
        tau_inv[ready] = ykey
        for y in succ:
            arrows.add((ready, y))
            arrows.add((y, ykey))
        sequences.append((ready, tuple(succ), ykey, ExplicitSes(X, mid, Y, f, q)))
        resolve_pending(ykey, Y)
    if pending:
        raise KnittingError("some radical summands of projectives were never reached")
    catalog = ModuleCatalog(Q, mods, F)
    inj_keys = {}
    for v, I in enumerate(injs, start=1):
        inj_keys[v] = catalog.find(I)
    return KnitResult(catalog, tau_inv, arrows, sequences, proj_keys, inj_keys)
