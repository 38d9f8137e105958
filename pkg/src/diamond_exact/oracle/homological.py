"""Hom, Ext, extensions, pushouts and Krull-Schmidt splitting by linear algebra."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg as la
from .algebra import (
    BoundQuiver,
    MatrixRep,
    Morphism,
    compose,
    direct_sum,
    flatten,
    hstack_maps,
    is_morphism,
    kernel,
    cokernel,
    map_from_projective,
    projective,
    subrep,
    sum_inclusions,
    top_generators,
    unflatten,
    vstack_maps,
)


class BrickError(ValueError):
    """A catalog entry has an endomorphism algebra of dimension > 1."""


class DecompositionError(ValueError):
    """A module has a summand outside the supplied catalog."""


@dataclass
class HomSpace:
    source: MatrixRep
    target: MatrixRep
    dim: int
    basis: list[Morphism]


def _hom_system(M: MatrixRep, N: MatrixRep) -> tuple[list[list], int, list[int]]:
    Q = M.quiver
    offsets = []
    total = 0
    for d, e in zip(M.dims, N.dims):
        offsets.append(total)
        total += d * e
    rows = []
    for a, (s, t) in enumerate(Q.arrows):
        ms, mt, ns, nt = M.dims[s - 1], M.dims[t - 1], N.dims[s - 1], N.dims[t - 1]
        if ms == 0 or nt == 0:
            continue
        Ma, Na = M.mats[a], N.mats[a]
        for i in range(nt):
            for j in range(ms):
                row = [0] * total
                for k in range(mt):
                    c = Ma[k, j]
                    if c != 0:
                        row[offsets[t - 1] + i * mt + k] += c
                for k in range(ns):
                    c = Na[i, k]
                    if c != 0:
                        row[offsets[s - 1] + k * ms + j] -= c
                if any(x != 0 for x in row):
                    rows.append(row)
    return rows, total, offsets


def hom_space(M: MatrixRep, N: MatrixRep) -> HomSpace:
    if M.quiver != N.quiver or M.field != N.field:
        raise ValueError("representations over different algebras or fields")
    F = M.field
    rows, total, _ = _hom_system(M, N)
    if F.dtype is not object:
        rows = [[F.coerce(x) for x in r] for r in rows]
    null = la.nullspace_rows(F, rows, total)
    basis = [unflatten(F, null[:, k], M, N) for k in range(null.shape[1])]
    return HomSpace(M, N, len(basis), basis)


def hom_dim(M: MatrixRep, N: MatrixRep) -> int:
    F = M.field
    rows, total, _ = _hom_system(M, N)
    if not rows:
        return total
    if F.dtype is not object:
        rows = [[F.coerce(x) for x in r] for r in rows]
    return total - la.rank(F, F.matrix(rows))


@lru_cache(maxsize=None)
def _projective_cached(Q: BoundQuiver, v: int, F) -> MatrixRep:
    return projective(Q, v, F)


@dataclass
class Presentation:
    """``0 -> omega -(iota)-> cover -(pi)-> module -> 0`` with a minimal cover."""
    module: MatrixRep
    gens: list[tuple[int, np.ndarray]]
    cover: MatrixRep
    pi: Morphism
    omega: MatrixRep
    iota: Morphism


def presentation(M: MatrixRep) -> Presentation:
    Q, F = M.quiver, M.field
    gens = top_generators(M)
    summands = [_projective_cached(Q, v, F) for v, _ in gens]
    cover = direct_sum(summands, Q, F)
    pi = hstack_maps(F, [map_from_projective(M, v, m) for v, m in gens], M)
    for i in range(Q.n):
        if la.rank(F, pi[i]) != M.dims[i]:
            raise RuntimeError("projective cover map is not surjective")
    omega, iota = kernel(cover, M, pi)
    return Presentation(M, gens, cover, pi, omega, iota)


@dataclass
class ExtSpace:
    """Ext^1(quot, sub) as Hom(omega, sub) modulo maps factoring through the cover."""
    quot: MatrixRep
    sub: MatrixRep
    pres: Presentation
    cocycles: list[Morphism]
    coboundaries: np.ndarray  # flattened, as columns
    classes: list[Morphism]

    @property
    def dim(self) -> int:
        return len(self.classes)


def _coboundaries(pres: Presentation, A: MatrixRep) -> np.ndarray:
    F = A.field
    cols = []
    n = len(pres.gens)
    for j, (v, _) in enumerate(pres.gens):
        P = _projective_cached(A.quiver, v, F)
        for k in range(A.dim(v)):
            e = F.zeros(A.dim(v), 1)
            e[k, 0] = F.coerce(1)
            parts = []
            for jj, (vv, _) in enumerate(pres.gens):
                if jj == j:
                    parts.append(map_from_projective(A, v, e))
                else:
                    parts.append(tuple(F.zeros(A.dims[i], d) for i, d in
                                       enumerate(_projective_cached(A.quiver, vv, F).dims)))
            g = hstack_maps(F, parts, A)
            cols.append(flatten(compose(F, g, pres.iota)))
    width = sum(d * e for d, e in zip(pres.omega.dims, A.dims))
    if not cols:
        return F.zeros(width, 0)
    return F.matrix(cols).T.copy() if width else F.zeros(0, len(cols))


def ext_space(C: MatrixRep, A: MatrixRep, pres: Presentation | None = None) -> ExtSpace:
    F = A.field
    pres = pres or presentation(C)
    cocycles = hom_space(pres.omega, A).basis
    R = _coboundaries(pres, A)
    width = R.shape[0]
    if cocycles:
        Phi = F.matrix([flatten(f) for f in cocycles]).T.copy() if width else F.zeros(0, len(cocycles))
    else:
        Phi = F.zeros(width, 0)
    aug = np.concatenate([la.column_space(F, R), Phi], axis=1)
    r = la.rank(F, R)
    classes = []
    if aug.size:
        _, pivots = F.rref(aug)
        classes = [cocycles[p - r] for p in pivots if p >= r]
    return ExtSpace(C, A, pres, cocycles, R, classes)


def ext_dim(k: int, M: MatrixRep, N: MatrixRep) -> int:
    """dim Ext^k(M, N) for k in {1, 2} via a minimal projective resolution."""
    if k == 1:
        return ext_space(M, N).dim
    if k == 2:
        return ext_space(presentation(M).omega, N).dim
    raise ValueError("only k = 1, 2 are supported")


def euler_form(Q: BoundQuiver, d: tuple[int, ...], e: tuple[int, ...]) -> int:
    return sum(x * y for x, y in zip(d, e)) - sum(d[s - 1] * e[t - 1] for s, t in Q.arrows)


@dataclass
class ExplicitSes:
    """``0 -> sub -(i)-> middle -(p)-> quot -> 0``."""
    sub: MatrixRep
    middle: MatrixRep
    quot: MatrixRep
    i: Morphism
    p: Morphism

    def is_exact(self) -> bool:
        F = self.middle.field
        if not (is_morphism(self.sub, self.middle, self.i) and is_morphism(self.middle, self.quot, self.p)):
            return False
        for v in range(self.middle.quiver.n):
            a, b, c = self.sub.dims[v], self.middle.dims[v], self.quot.dims[v]
            if a + c != b:
                return False
            if la.rank(F, self.i[v]) != a or la.rank(F, self.p[v]) != c:
                return False
            if b and not la.is_zero(F.mul(self.p[v], self.i[v])):
                return False
        return True


def _pushout_along_cocycle(pres: Presentation, A: MatrixRep, phi: Morphism) -> ExplicitSes:
    F = A.field
    Q = A.quiver
    Ppart = [F.reduce(-m) for m in pres.iota]
    g = vstack_maps(F, [phi, tuple(Ppart)], pres.omega)
    AP = direct_sum([A, pres.cover], Q, F)
    B, q, secs = cokernel(pres.omega, AP, g)
    incA, incP = sum_inclusions([A, pres.cover])
    i = compose(F, q, incA)
    zero_pi = tuple(la.hstack(F, [F.zeros(pres.module.dims[v], A.dims[v]), pres.pi[v]], pres.module.dims[v])
                    for v in range(Q.n))
    p = tuple(F.mul(zero_pi[v], secs[v]) for v in range(Q.n))
    return ExplicitSes(A, B, pres.module, i, p)


def extension_realization(C: MatrixRep, A: MatrixRep, index: int | None = 0,
                          coeffs: list | None = None, ext: ExtSpace | None = None) -> ExplicitSes:
    """An explicit short exact sequence representing a class of Ext^1(C, A).

    Select the class by basis ``index`` or by ``coeffs`` on the class basis;
    ``index=None`` with no coefficients gives the split class.
    """
    F = A.field
    ext = ext or ext_space(C, A)
    phi = tuple(F.zeros(A.dims[v], ext.pres.omega.dims[v]) for v in range(A.quiver.n))
    if coeffs is not None:
        for c, cl in zip(coeffs, ext.classes):
            phi = tuple(F.reduce(x + F.coerce(c) * y) for x, y in zip(phi, cl))
    elif index is not None:
        if not 0 <= index < ext.dim:
            raise IndexError(f"class index {index} out of range for Ext of dim {ext.dim}")
        phi = ext.classes[index]
    return _pushout_along_cocycle(ext.pres, A, phi)


def pushout(ses: ExplicitSes, target: MatrixRep, f: Morphism) -> ExplicitSes:
    """Push ``ses`` out along ``f: ses.sub -> target``."""
    F = target.field
    Q = target.quiver
    if not is_morphism(ses.sub, target, f):
        raise ValueError("f is not a morphism out of the sub-term")
    neg_i = tuple(F.reduce(-m) for m in ses.i)
    g = vstack_maps(F, [f, neg_i], ses.sub)
    WB = direct_sum([target, ses.middle], Q, F)
    B2, q, secs = cokernel(ses.sub, WB, g)
    incW, _ = sum_inclusions([target, ses.middle])
    i2 = compose(F, q, incW)
    zp = tuple(la.hstack(F, [F.zeros(ses.quot.dims[v], target.dims[v]), ses.p[v]], ses.quot.dims[v])
               for v in range(Q.n))
    p2 = tuple(F.mul(zp[v], secs[v]) for v in range(Q.n))
    return ExplicitSes(target, B2, ses.quot, i2, p2)


def pullback(ses: ExplicitSes, source: MatrixRep, g: Morphism) -> ExplicitSes:
    """Pull ``ses`` back along ``g: source -> ses.quot``."""
    F = source.field
    Q = source.quiver
    if not is_morphism(source, ses.quot, g):
        raise ValueError("g is not a morphism into the quotient term")
    BS = direct_sum([ses.middle, source], Q, F)
    neg_g = tuple(F.reduce(-m) for m in g)
    h = hstack_maps(F, [ses.p, neg_g], ses.quot)
    B2, inc = kernel(BS, ses.quot, h)
    incB, incS = sum_inclusions([ses.middle, source])
    i_into_BS = compose(F, incB, ses.i)
    i2 = tuple(la.solve(F, inc[v], i_into_BS[v]) for v in range(Q.n))
    projS = tuple(m.T.copy() for m in incS)
    p2 = compose(F, projS, inc)
    return ExplicitSes(ses.sub, B2, source, i2, p2)


def _scalar(F, X: MatrixRep, endo: Morphism):
    for v in range(X.quiver.n):
        if X.dims[v]:
            return endo[v][0, 0]
    raise ValueError("zero module has no scalar")


def pairing_rank(X: MatrixRep, M: MatrixRep) -> int:
    """Rank of Hom(X, M) x Hom(M, X) -> End(X) = K; the multiplicity of a brick X in M."""
    if any(d > e for d, e in zip(X.dims, M.dims)):
        return 0
    F = M.field
    fs = hom_space(X, M).basis
    if not fs:
        return 0
    gs = hom_space(M, X).basis
    if not gs:
        return 0
    table = [[_scalar(F, X, compose(F, g, f)) for g in gs] for f in fs]
    return la.rank(F, F.matrix(table))


def is_brick(X: MatrixRep) -> bool:
    return hom_dim(X, X) == 1


def isomorphic_bricks(X: MatrixRep, Y: MatrixRep) -> bool:
    return X.dims == Y.dims and pairing_rank(X, Y) == 1


def decompose(M: MatrixRep, catalog: list[tuple[object, MatrixRep]], check_bricks: bool = True) -> Counter:
    """Multiset of catalog keys whose direct sum is isomorphic to ``M``.

    Each catalog entry must be a brick: then ``X`` is a summand of ``M`` exactly
    when some composite ``M -> X`` after ``X -> M`` is nonzero, and the number
    of copies is the rank of that composition pairing.
    """
    out = Counter()
    remaining = list(M.dims)
    for key, X in catalog:
        if check_bricks and not is_brick(X):
            raise BrickError(f"catalog entry {key!r} is not a brick")
        if any(d > r for d, r in zip(X.dims, remaining)):
            continue
        if sum(X.dims) == 0:
            continue
        k = pairing_rank(X, M)
        if k:
            out[key] += k
            remaining = [r - k * d for r, d in zip(remaining, X.dims)]
    if any(remaining):
        raise DecompositionError(f"residual dimension vector {tuple(remaining)} matches no catalog entry")
    return out


def lift_through_cover(h: Morphism, X_pres: Presentation, C_pres: Presentation) -> tuple[Morphism, Morphism]:
    """Lift ``h: X -> C`` to the covers and restrict to the syzygies.

    Returns ``(h0: cover(X) -> cover(C), h1: omega(X) -> omega(C))``.
    """
    C = C_pres.module
    F = C.field
    parts = []
    for v, m in X_pres.gens:
        target = F.mul(h[v - 1], m)
        y = la.solve(F, C_pres.pi[v - 1], target)
        parts.append(map_from_projective(C_pres.cover, v, y))
    h0 = hstack_maps(F, parts, C_pres.cover)
    h1 = tuple(la.solve(F, C_pres.iota[v], F.mul(h0[v], X_pres.iota[v])) for v in range(C.quiver.n))
    return h0, h1


def relative_ext_basis(C: MatrixRep, A: MatrixRep, generators: list[MatrixRep],
                       ext: ExtSpace | None = None) -> list[Morphism]:
    """Cocycles spanning F_X(C, A) modulo coboundaries.

    A class lies in F_X(C, A) when its pullback along every map X -> C with X
    among ``generators`` splits.
    """
    F = A.field
    ext = ext or ext_space(C, A)
    if ext.dim == 0:
        return []
    conditions = []
    for X in generators:
        homs = hom_space(X, C).basis
        if not homs:
            continue
        X_pres = presentation(X)
        R_X = _coboundaries(X_pres, A)
        if R_X.shape[0] == 0:
            continue
        Y = la.left_nullspace(F, R_X) if R_X.shape[1] else F.identity(R_X.shape[0])
        if Y.shape[0] == 0:
            continue
        for h in homs:
            _, h1 = lift_through_cover(h, X_pres, ext.pres)
            Psi = F.matrix([flatten(compose(F, phi, h1)) for phi in ext.cocycles]).T.copy()
            conditions.append(F.mul(Y, Psi))
    if not conditions:
        return list(ext.classes)
    S = la.nullspace(F, np.concatenate(conditions, axis=0))
    if S.shape[1] == 0:
        return []
    combos = [_combine(F, ext.cocycles, S[:, k]) for k in range(S.shape[1])]
    R = ext.coboundaries
    Phi = F.matrix([flatten(f) for f in combos]).T.copy()
    r = la.rank(F, R)
    aug = np.concatenate([la.column_space(F, R), Phi], axis=1)
    _, pivots = F.rref(aug)
    return [combos[p - r] for p in pivots if p >= r]


def _combine(F, maps: list[Morphism], coeffs) -> Morphism:
    out = tuple(F.zeros(*m.shape) for m in maps[0])
    for c, f in zip(coeffs, maps):
        if c != 0:
            out = tuple(F.reduce(x + c * y) for x, y in zip(out, f))
    return out


def relative_ext_dim(C: MatrixRep, A: MatrixRep, generators: list[MatrixRep],
                     ext: ExtSpace | None = None) -> int:
    """dim of F_X(C, A)."""
    return len(relative_ext_basis(C, A, generators, ext))


def projective_points(F, k: int) -> list[tuple]:
    """One coefficient vector per line of F^k; prime fields only when k > 1."""
    if k == 0:
        return []
    if k == 1:
        return [(F.coerce(1),)]
    if not hasattr(F, "p"):
        raise ValueError("enumerating every class of a multi-dimensional space needs a prime field")
    out = []
    for lead in range(k):
        for tail in itertools.product(range(F.p), repeat=k - lead - 1):
            out.append((0,) * lead + (1,) + tail)
    return out


def realize_combination(C: MatrixRep, A: MatrixRep, cocycles: list[Morphism], coeffs,
                        ext: ExtSpace | None = None) -> ExplicitSes:
    """Explicit sequence for the class ``sum coeffs[i] * cocycles[i]``."""
    F = A.field
    ext = ext or ext_space(C, A)
    return _pushout_along_cocycle(ext.pres, A, _combine(F, cocycles, [F.coerce(c) for c in coeffs]))


def local_summands_of_radical(P: MatrixRep, v: int) -> list[MatrixRep]:
    """For a monomial algebra, rad P(v) splits as the cyclic modules a.A over arrows a out of v."""
    Q, F = P.quiver, P.field
    out = []
    for a in Q.arrows_out(v):
        bases = []
        for w in range(1, Q.n + 1):
            paths = Q.paths(v, w)
            cols = [k for k, p in enumerate(paths) if p and p[0] == a]
            b = F.zeros(len(paths), len(cols))
            for j, k in enumerate(cols):
                b[k, j] = F.coerce(1)
            bases.append(b)
        R, _ = subrep(P, bases)
        if R.total_dim:
            out.append(R)
    return out
