"""Bound quivers with monomial relations and their matrix representations.

Paths compose left to right: ``(a, b)`` means arrow ``a`` followed by ``b``.
A representation assigns a matrix of shape ``(dim target, dim source)`` to
every arrow; a morphism is a tuple of per-vertex matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from . import linalg as la
from .linalg import QQ

PATH_CAP = 32


class PathOverflowError(RuntimeError):
    pass


@dataclass(frozen=True)
class BoundQuiver:
    n: int
    arrows: tuple[tuple[int, int], ...]
    relations: tuple[tuple[int, ...], ...] = ()
    arrow_names: tuple[str, ...] | None = None

    def __post_init__(self):
        for s, t in self.arrows:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise ValueError(f"arrow {s}->{t} leaves the vertex set 1..{self.n}")
        for rel in self.relations:
            if len(rel) < 2:
                raise ValueError("relations must be paths of length >= 2")
            for a, b in zip(rel, rel[1:]):
                if self.arrows[a][1] != self.arrows[b][0]:
                    raise ValueError(f"relation {rel} is not a path")

    def source(self, a: int) -> int:
        return self.arrows[a][0]

    def target(self, a: int) -> int:
        return self.arrows[a][1]

    def _nonzero(self, path: tuple[int, ...]) -> bool:
        for rel in self.relations:
            k = len(rel)
            for i in range(len(path) - k + 1):
                if path[i:i + k] == rel:
                    return False
        return True

    @cached_property
    def path_basis(self) -> dict[tuple[int, int], list[tuple[int, ...]]]:
        """Nonzero paths grouped by ``(start, end)``; trivial paths are ``()``."""
        basis: dict[tuple[int, int], list[tuple[int, ...]]] = {}
        frontier = []
        for v in range(1, self.n + 1):
            basis.setdefault((v, v), []).append(())
            frontier.append((v, ()))
        length = 0
        while frontier:
            length += 1
            if length > PATH_CAP:
                raise PathOverflowError(f"path basis exceeds length cap {PATH_CAP}")
            nxt = []
            for start, p in frontier:
                end = self.target(p[-1]) if p else start
                for a, (s, t) in enumerate(self.arrows):
                    if s == end and self._nonzero(p + (a,)):
                        q = p + (a,)
                        basis.setdefault((start, t), []).append(q)
                        nxt.append((start, q))
            frontier = nxt
        return basis

    def paths(self, start: int, end: int) -> list[tuple[int, ...]]:
        return self.path_basis.get((start, end), [])

    def arrows_into(self, v: int) -> list[int]:
        return [a for a, (_, t) in enumerate(self.arrows) if t == v]

    def arrows_out(self, v: int) -> list[int]:
        return [a for a, (s, _) in enumerate(self.arrows) if s == v]

    def is_hereditary(self) -> bool:
        return not self.relations


def type_a_quiver(n: int, orientation: str) -> BoundQuiver:
    arrows = tuple((i, i + 1) if c == "R" else (i + 1, i) for i, c in enumerate(orientation, start=1))
    return BoundQuiver(n, arrows)


@dataclass
class MatrixRep:
    quiver: BoundQuiver
    dims: tuple[int, ...]
    mats: tuple[np.ndarray, ...]
    field: object = QQ
    name: object = None
    check: bool = dc_field(default=True, repr=False)

    def __post_init__(self):
        self.dims = tuple(self.dims)
        self.mats = tuple(self.mats)
        if len(self.dims) != self.quiver.n or len(self.mats) != len(self.quiver.arrows):
            raise ValueError("dimension mismatch between representation and quiver")
        if self.check:
            for a, (s, t) in enumerate(self.quiver.arrows):
                if self.mats[a].shape != (self.dims[t - 1], self.dims[s - 1]):
                    raise ValueError(f"arrow {a}: matrix shape {self.mats[a].shape} "
                                     f"!= {(self.dims[t - 1], self.dims[s - 1])}")
            for rel in self.quiver.relations:
                if not la.is_zero(self.path_matrix(rel)):
                    raise ValueError(f"relation {rel} does not vanish")

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def path_matrix(self, path: tuple[int, ...], start: int | None = None) -> np.ndarray:
        F = self.field
        if not path:
            return F.identity(self.dim(start))
        m = self.mats[path[0]]
        for a in path[1:]:
            m = F.mul(self.mats[a], m)
        return m

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name is not None else ""
        return f"<MatrixRep{label} dims={self.dims}>"


Morphism = tuple  # per-vertex matrices, index v-1


def zero_rep(Q: BoundQuiver, F=QQ) -> MatrixRep:
    return MatrixRep(Q, (0,) * Q.n, tuple(F.zeros(0, 0) for _ in Q.arrows), F)


def identity_map(M: MatrixRep) -> Morphism:
    return tuple(M.field.identity(d) for d in M.dims)


def zero_map(M: MatrixRep, N: MatrixRep) -> Morphism:
    return tuple(M.field.zeros(e, d) for d, e in zip(M.dims, N.dims))


def compose(F, g: Morphism, f: Morphism) -> Morphism:
    """``g o f``."""
    return tuple(F.mul(gv, fv) for gv, fv in zip(g, f))


def add_maps(F, f: Morphism, g: Morphism, scale=1) -> Morphism:
    return tuple(F.reduce(a + scale * b) for a, b in zip(f, g))


def scale_map(F, f: Morphism, c) -> Morphism:
    c = F.coerce(c)
    return tuple(F.reduce(a * c) for a in f)


def is_zero_map(f: Morphism) -> bool:
    return all(la.is_zero(m) for m in f)


def is_morphism(M: MatrixRep, N: MatrixRep, f: Morphism) -> bool:
    F = M.field
    for a, (s, t) in enumerate(M.quiver.arrows):
        lhs = F.mul(f[t - 1], M.mats[a])
        rhs = F.mul(N.mats[a], f[s - 1])
        if not la.is_zero(F.reduce(lhs - rhs)):
            return False
    return True


def flatten(f: Morphism) -> list:
    return [x for m in f for x in m.flat]


def unflatten(F, vec, M: MatrixRep, N: MatrixRep) -> Morphism:
    out = []
    i = 0
    for d, e in zip(M.dims, N.dims):
        m = F.zeros(e, d)
        for r in range(e):
            for c in range(d):
                m[r, c] = vec[i]
                i += 1
        out.append(m)
    return tuple(out)


def projective(Q: BoundQuiver, v: int, F=QQ) -> MatrixRep:
    """P(v): basis at w is the nonzero paths from v to w; arrows extend paths."""
    bases = [Q.paths(v, w) for w in range(1, Q.n + 1)]
    index = [{p: k for k, p in enumerate(b)} for b in bases]
    mats = []
    for a, (s, t) in enumerate(Q.arrows):
        m = F.zeros(len(bases[t - 1]), len(bases[s - 1]))
        for k, p in enumerate(bases[s - 1]):
            q = p + (a,)
            if q in index[t - 1]:
                m[index[t - 1][q], k] = F.coerce(1)
        mats.append(m)
    return MatrixRep(Q, tuple(len(b) for b in bases), tuple(mats), F, name=f"P({v})")


def injective(Q: BoundQuiver, v: int, F=QQ) -> MatrixRep:
    """I(v): basis at w is the nonzero paths from w to v; arrows strip a prefix."""
    bases = [Q.paths(w, v) for w in range(1, Q.n + 1)]
    index = [{p: k for k, p in enumerate(b)} for b in bases]
    mats = []
    for a, (s, t) in enumerate(Q.arrows):
        m = F.zeros(len(bases[t - 1]), len(bases[s - 1]))
        for k, p in enumerate(bases[s - 1]):
            if p and p[0] == a and p[1:] in index[t - 1]:
                m[index[t - 1][p[1:]], k] = F.coerce(1)
        mats.append(m)
    return MatrixRep(Q, tuple(len(b) for b in bases), tuple(mats), F, name=f"I({v})")


def simple(Q: BoundQuiver, v: int, F=QQ) -> MatrixRep:
    dims = tuple(1 if w == v else 0 for w in range(1, Q.n + 1))
    mats = tuple(F.zeros(dims[t - 1], dims[s - 1]) for s, t in Q.arrows)
    return MatrixRep(Q, dims, mats, F, name=f"S({v})")


def map_from_projective(M: MatrixRep, v: int, m: np.ndarray) -> Morphism:
    """The morphism P(v) -> M sending the trivial path e_v to the vector ``m``."""
    Q, F = M.quiver, M.field
    out = []
    for w in range(1, Q.n + 1):
        cols = [F.mul(M.path_matrix(p, start=v), m) for p in Q.paths(v, w)]
        out.append(la.hstack(F, cols, M.dim(w)))
    return tuple(out)


def direct_sum(reps: list[MatrixRep], Q: BoundQuiver | None = None, F=None) -> MatrixRep:
    if not reps:
        if Q is None:
            raise ValueError("empty direct sum needs an explicit quiver")
        return zero_rep(Q, F or QQ)
    Q = reps[0].quiver
    F = reps[0].field
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(Q.n))
    mats = tuple(la.block_diag(F, [r.mats[a] for r in reps]) for a in range(len(Q.arrows)))
    return MatrixRep(Q, dims, mats, F, check=False)


def sum_inclusions(reps: list[MatrixRep]) -> list[Morphism]:
    """Canonical inclusions of each summand into ``direct_sum(reps)``."""
    F = reps[0].field
    n = reps[0].quiver.n
    out = []
    offsets = [0] * n
    totals = [sum(r.dims[i] for r in reps) for i in range(n)]
    for r in reps:
        f = []
        for i in range(n):
            m = F.zeros(totals[i], r.dims[i])
            for k in range(r.dims[i]):
                m[offsets[i] + k, k] = F.coerce(1)
            f.append(m)
        for i in range(n):
            offsets[i] += r.dims[i]
        out.append(tuple(f))
    return out


def sum_projections(reps: list[MatrixRep]) -> list[Morphism]:
    return [tuple(m.T.copy() for m in f) for f in sum_inclusions(reps)]


def hstack_maps(F, maps: list[Morphism], target: MatrixRep) -> Morphism:
    """``[f_1 ... f_k]`` from a direct sum of the sources into ``target``."""
    return tuple(la.hstack(F, [f[i] for f in maps], target.dims[i]) for i in range(target.quiver.n))


def vstack_maps(F, maps: list[Morphism], source: MatrixRep) -> Morphism:
    """``[f_1; ...; f_k]`` from ``source`` into a direct sum of the targets."""
    return tuple(la.vstack(F, [f[i] for f in maps], source.dims[i]) for i in range(source.quiver.n))


def subrep(M: MatrixRep, bases: list[np.ndarray]) -> tuple[MatrixRep, Morphism]:
    """Restrict ``M`` to a subrepresentation spanned per vertex by ``bases`` columns."""
    Q, F = M.quiver, M.field
    mats = []
    for a, (s, t) in enumerate(Q.arrows):
        image = F.mul(M.mats[a], bases[s - 1])
        mats.append(la.solve(F, bases[t - 1], image))
    K = MatrixRep(Q, tuple(b.shape[1] for b in bases), tuple(mats), F, check=False)
    return K, tuple(bases)


def kernel(M: MatrixRep, N: MatrixRep, f: Morphism) -> tuple[MatrixRep, Morphism]:
    F = M.field
    bases = [la.nullspace(F, f[i]) if f[i].shape[0] else F.identity(M.dims[i]) for i in range(M.quiver.n)]
    return subrep(M, bases)


def image_bases(F, f: Morphism) -> list[np.ndarray]:
    return [la.column_space(F, m) for m in f]


def cokernel(M: MatrixRep, N: MatrixRep, f: Morphism) -> tuple[MatrixRep, Morphism, list[np.ndarray]]:
    """Return ``(C, q, sections)`` with ``q: N -> C`` surjective and ``q_v s_v = id``."""
    Q, F = N.quiver, N.field
    quots, secs = [], []
    for i in range(Q.n):
        img = la.column_space(F, f[i]) if f[i].size else F.zeros(N.dims[i], 0)
        comp = la.complement(F, img)
        basis = np.concatenate([img, comp], axis=1) if N.dims[i] else F.zeros(0, 0)
        if N.dims[i]:
            inv = la.solve(F, basis, F.identity(N.dims[i]))
            q = inv[img.shape[1]:, :]
        else:
            q = F.zeros(0, 0)
        quots.append(q)
        secs.append(comp)
    mats = []
    for a, (s, t) in enumerate(Q.arrows):
        mats.append(F.mul(quots[t - 1], F.mul(N.mats[a], secs[s - 1])))
    C = MatrixRep(Q, tuple(q.shape[0] for q in quots), tuple(mats), F, check=False)
    return C, tuple(quots), secs


def top_generators(M: MatrixRep) -> list[tuple[int, np.ndarray]]:
    """Vectors spanning a complement of rad M, as ``(vertex, column)`` pairs."""
    Q, F = M.quiver, M.field
    gens = []
    for v in range(1, Q.n + 1):
        if M.dim(v) == 0:
            continue
        incoming = [M.mats[a] for a in Q.arrows_into(v)]
        rad = la.column_space(F, la.hstack(F, incoming, M.dim(v)))
        comp = la.complement(F, rad)
        for k in range(comp.shape[1]):
            gens.append((v, comp[:, k:k + 1]))
    return gens


def dimension_vector(M: MatrixRep) -> tuple[int, ...]:
    return M.dims


def with_field(M: MatrixRep, F) -> MatrixRep:
    """Reinterpret an integer-entried representation over another field."""
    mats = tuple(F.matrix(m.tolist(), m.shape) if m.size else F.zeros(*m.shape) for m in M.mats)
    return MatrixRep(M.quiver, M.dims, mats, F, name=M.name)
