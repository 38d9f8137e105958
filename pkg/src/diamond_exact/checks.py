"""Cross-checks between the coordinate calculus and the linear-algebra oracle.

Every function returns a :class:`CheckResult` whose witness lists the first
few disagreements, so a failure is reproducible from the JSON alone.
"""
from __future__ import annotations

import itertools
import random
from math import comb
from collections import Counter
from dataclasses import dataclass, field

from .exact import (admissible_class_dim, e_diamond, grid_for, is_complete_rigid, is_maximal_rigid,
                    is_tilting, oracle_structure, verify_dominant_witness, verify_resolution,
                    zero_auslander_report)
from .grid import ext_class, hom_dim
from .mar import conflict_graph, enumerate_mar, lattice_extremes_ok, mar_poset, verify_bijection
from .oracle.algebra import cokernel, compose, is_zero_map, kernel
from .oracle.homological import ExplicitSes, pullback, pushout
from .oracle.typea import interval_catalog
from .quiver import ModuleSum, TypeAQuiver

MAX_WITNESSES = 5


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed, "cases": self.cases, "witnesses": self.witnesses}


def _result(name: str, cases: int, bad: list) -> CheckResult:
    return CheckResult(name, not bad, cases, bad[:MAX_WITNESSES])


def _tag(Q: TypeAQuiver) -> str:
    return f"n={Q.n} {Q.orientation}"


def check_hom(Q: TypeAQuiver) -> CheckResult:
    g, cat = grid_for(Q), interval_catalog(Q)
    mods = g.modules()
    bad = []
    for a, b in itertools.product(mods, mods):
        ours, orc = hom_dim(g, a, b), cat.hom_dim(a, b)
        if ours != orc:
            bad.append({"quiver": _tag(Q), "pair": [a.to_json(), b.to_json()], "grid": ours, "oracle": orc})
    return _result("hom", len(mods) ** 2, bad)


def check_ext(Q: TypeAQuiver) -> CheckResult:
    g, cat = grid_for(Q), interval_catalog(Q)
    mods = g.modules()
    bad = []
    for quot, sub in itertools.product(mods, mods):
        ses = ext_class(g, quot, sub)
        d = cat.ext_dim(quot, sub)
        entry = {"quiver": _tag(Q), "quot": quot.to_json(), "sub": sub.to_json()}
        if (ses is not None) != (d == 1) or d > 1:
            bad.append({**entry, "grid": ses is not None, "oracle_dim": d})
            continue
        if ses is None:
            continue
        mid = cat.decompose(cat.realize(quot, sub).middle)
        if mid != Counter(ses.middle.summands):
            bad.append({**entry, "grid_middle": ses.middle.to_json(),
                        "oracle_middle": sorted(m.to_json() for m in mid.elements())})
    return _result("ext", len(mods) ** 2, bad)


def check_diamond_characterization(Q: TypeAQuiver) -> CheckResult:
    """Admissible for the diamond structure exactly when the oracle middle has two summands."""
    E = e_diamond(Q)
    rel = oracle_structure(E)
    cat = rel.catalog
    mods = E.grid.modules()
    bad = []
    for quot, sub in itertools.product(mods, mods):
        if cat.ext_dim(quot, sub) == 0:
            if admissible_class_dim(E, quot, sub):
                bad.append({"quiver": _tag(Q), "quot": quot.to_json(), "sub": sub.to_json(), "reason": "ext zero"})
            continue
        two = sum(cat.decompose(cat.realize(quot, sub).middle).values()) == 2
        ours = admissible_class_dim(E, quot, sub)
        orc = rel.class_dim(quot, sub)
        if ours != int(two) or orc != ours:
            bad.append({"quiver": _tag(Q), "quot": quot.to_json(), "sub": sub.to_json(),
                        "grid": ours, "oracle_relative": orc, "two_summands": two})
    return _result("diamond characterization", len(mods) ** 2, bad)


def check_zero_auslander(Q: TypeAQuiver) -> CheckResult:
    E = e_diamond(Q)
    rep = zero_auslander_report(E)
    bad = []
    if not (rep.global_dim <= 1 and rep.dominant_dim_ok):
        bad.append({"quiver": _tag(Q), "global_dim": rep.global_dim, "dominant_dim_ok": rep.dominant_dim_ok})
    for r in rep.resolutions:
        if not verify_resolution(E, r):
            bad.append({"quiver": _tag(Q), "resolution": r.to_json()})
    for w in rep.witnesses:
        if not verify_dominant_witness(E, w):
            bad.append({"quiver": _tag(Q), "witness": w.to_json()})
    return _result("0-Auslander", len(rep.resolutions) + len(rep.witnesses), bad)


def _predicates(Q: TypeAQuiver, T: frozenset, mars: set) -> dict:
    E = e_diamond(Q)
    return {"tilting": is_tilting(E, T), "maximal_rigid": is_maximal_rigid(E, T),
            "complete_rigid": is_complete_rigid(E, T), "mar": T in mars}


def check_mar_tilting(Q: TypeAQuiver, exhaustive: bool, samples: int = 0, seed: int = 0) -> CheckResult:
    """The four characterizations of maximal almost rigid modules agree."""
    mars = {frozenset(m.summands) for m in enumerate_mar(Q)}
    mods = grid_for(Q).modules()
    if exhaustive:
        cands = [frozenset(c) for k in range(1, len(mods) + 1) for c in itertools.combinations(mods, k)]
    else:
        cands = sorted(mars, key=sorted) + random_rigid_non_mar(Q, samples, seed)
    bad = []
    for T in cands:
        p = _predicates(Q, T, mars)
        if len(set(p.values())) != 1:
            bad.append({"quiver": _tag(Q), "module": ModuleSum.of(T).to_json(), **p})
    return _result("MAR = tilting", len(cands), bad)


def random_rigid_non_mar(Q: TypeAQuiver, count: int, seed: int = 0) -> list[frozenset]:
    """Distinct random almost rigid modules that are not maximal: greedy independent sets stopped early."""
    cg = conflict_graph(Q)
    rng = random.Random(seed)
    verts = list(cg.vertices)
    out, seen = [], set()
    while len(out) < count:
        order = verts[:]
        rng.shuffle(order)
        stop = rng.randint(1, 2 * Q.n - 2)
        chosen = set()
        for v in order:
            if len(chosen) == stop:
                break
            if not cg.adjacency[v] & chosen:
                chosen.add(v)
        T = frozenset(chosen)
        if T not in seen and any(v not in T and not cg.adjacency[v] & T for v in verts):
            seen.add(T)
            out.append(T)
    return out


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def check_counts(Q: TypeAQuiver) -> CheckResult:
    mars = enumerate_mar(Q)
    boundary = grid_for(Q).boundary
    bad = []
    if len(mars) != catalan(Q.n - 1):
        bad.append({"quiver": _tag(Q), "count": len(mars), "expected": catalan(Q.n - 1)})
    for T in mars:
        if len(T.summands) != 2 * Q.n - 1 or not boundary <= set(T.summands):
            bad.append({"quiver": _tag(Q), "module": T.to_json()})
    return _result("MAR count", len(mars), bad)


def check_lattice_bijection(Q: TypeAQuiver) -> CheckResult:
    poset = mar_poset(Q)
    lo, hi = lattice_extremes_ok(Q, poset)
    bij = verify_bijection(Q)
    bad = []
    if not (poset.is_lattice and poset.minimum is not None and poset.maximum is not None and lo and hi):
        bad.append({"quiver": _tag(Q), "is_lattice": poset.is_lattice, "min_has_projectives": lo,
                    "max_has_injectives": hi})
    if not bij.ok:
        bad.append({"quiver": _tag(Q), "bijection": bij.to_json()})
    return _result("lattice and bijection", 1, bad)


def _split(ses: ExplicitSes, cat) -> bool:
    # finite length: a sequence is split iff its middle is isomorphic to sub + quot
    return cat.decompose(ses.middle) == cat.decompose(ses.sub) + cat.decompose(ses.quot)


def check_exact_axioms(Q: TypeAQuiver, compositions: bool) -> CheckResult:
    """Pushout and pullback closure of admissible classes, split sequences, composition of inflations."""
    E = e_diamond(Q)
    rel = oracle_structure(E)
    cat = rel.catalog
    mods = E.grid.modules()
    bad, cases = [], 0
    for quot, sub in itertools.product(mods, mods):
        split = cat.realize(quot, sub, index=None)
        cases += 1
        if not rel.is_admissible(split):
            bad.append({"quiver": _tag(Q), "split": [sub.to_json(), quot.to_json()]})
        if not admissible_class_dim(E, quot, sub):
            continue
        xi = cat.realize(quot, sub)
        for y in mods:
            for f in cat.hom(sub, y).basis:
                cases += 1
                po = pushout(xi, cat.rep(y), f)
                if not rel.is_admissible(po) or (not _split(po, cat) and not admissible_class_dim(E, quot, y)):
                    bad.append({"quiver": _tag(Q), "pushout": [sub.to_json(), quot.to_json(), y.to_json()]})
            for g in cat.hom(y, quot).basis:
                cases += 1
                pb = pullback(xi, cat.rep(y), g)
                if not rel.is_admissible(pb) or (not _split(pb, cat) and not admissible_class_dim(E, y, sub)):
                    bad.append({"quiver": _tag(Q), "pullback": [sub.to_json(), quot.to_json(), y.to_json()]})
    if compositions:
        for x, y, z in itertools.product(mods, mods, mods):
            f = _admissible_mono(rel, x, y)
            g = _admissible_mono(rel, y, z) if f is not None else None
            if f is None or g is None:
                continue
            cases += 1
            if _admissible_mono(rel, x, z, compose(cat.field, g, f)) is None:
                bad.append({"quiver": _tag(Q), "composition": [x.to_json(), y.to_json(), z.to_json()]})
    return _result("exact structure axioms", cases, bad)


def _admissible_mono(rel, a, b, f=None):
    """The inflation ``a -> b`` if it is an admissible monomorphism, else None."""
    cat = rel.catalog
    if f is None:
        basis = cat.hom(a, b).basis
        if len(basis) != 1:
            return None
        f = basis[0]
    A, B = cat.rep(a), cat.rep(b)
    if is_zero_map(f) or kernel(A, B, f)[0].total_dim:
        return None
    C, q, _ = cokernel(A, B, f)
    return f if rel.is_admissible(ExplicitSes(A, B, C, f, q)) else None
