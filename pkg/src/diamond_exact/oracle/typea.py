"""Interval modules of type A quivers as explicit matrix representations."""
from __future__ import annotations

from functools import lru_cache

from ..quiver import Interval, TypeAQuiver, list_indecomposables
from .algebra import BoundQuiver, MatrixRep, type_a_quiver
from .catalog import ModuleCatalog
from .linalg import QQ


def interval_rep(B: BoundQuiver, m: Interval, F=QQ) -> MatrixRep:
    dims = tuple(1 if v in m else 0 for v in range(1, B.n + 1))
    mats = []
    for s, t in B.arrows:
        if s in m and t in m:
            mats.append(F.identity(1))
        else:
            mats.append(F.zeros(dims[t - 1], dims[s - 1]))
    return MatrixRep(B, dims, tuple(mats), F, name=m)


@lru_cache(maxsize=None)
def bound_quiver(Q: TypeAQuiver) -> BoundQuiver:
    return type_a_quiver(Q.n, Q.orientation)


@lru_cache(maxsize=64)
def interval_catalog(Q: TypeAQuiver, F=QQ) -> ModuleCatalog:
    """Catalog of all interval modules keyed by :class:`Interval`."""
    B = bound_quiver(Q)
    return ModuleCatalog(B, [(m, interval_rep(B, m, F)) for m in list_indecomposables(Q)], F)
