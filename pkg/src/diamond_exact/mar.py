"""Maximal almost rigid modules, their mutation, the Cambrian poset and polygon flips."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .exact import admissible_class_dim, e_diamond, grid_for
from .grid import SesClass, SesKind, ext_class
from .quiver import Interval, ModuleSum, TypeAQuiver, injective, projective


class NonMutableError(ValueError):
    pass


@dataclass(frozen=True)
class ConflictGraph:
    vertices: tuple
    edges: frozenset

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for a, b in map(tuple, self.edges):
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def neighbours(self, v: Interval) -> set:
        return set(self.adjacency[v])

    def is_independent(self, summands) -> bool:
        s = set(summands)
        return not any(self.adjacency[a] & s for a in s)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(tuple(e) for e in self.edges)
        return g


@lru_cache(maxsize=256)
def conflict_graph(Q: TypeAQuiver) -> ConflictGraph:
    """Edges join modules with a diamond between them in either direction."""
    Q.require_mar_domain()
    E = e_diamond(Q)
    mods = E.grid.modules()
    edges = set()
    for a, b in itertools.combinations(mods, 2):
        if admissible_class_dim(E, a, b) or admissible_class_dim(E, b, a):
            edges.add(frozenset((a, b)))
    return ConflictGraph(tuple(mods), frozenset(edges))


def is_almost_rigid(Q: TypeAQuiver, summands) -> bool:
    return conflict_graph(Q).is_independent(summands)


def _maximal_independent_sets(vertices, adj, seed) -> list[frozenset]:
    # Bron-Kerbosch with pivoting on the complement graph
    comp = {v: {w for w in vertices if w != v and w not in adj[v]} for v in vertices}
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(comp[u] & p))
        for v in sorted(p - comp[pivot]):
            expand(r | {v}, p & comp[v], x & comp[v])
            p = p - {v}
            x = x | {v}

    start = set(vertices) - set(seed)
    for s in seed:
        start &= comp[s]
    expand(set(seed), start, set())
    return out


def enumerate_mar(Q: TypeAQuiver) -> list[ModuleSum]:
    """All maximal almost rigid modules, ordered by their sorted summand lists."""
    cg = conflict_graph(Q)
    adj = {v: cg.neighbours(v) for v in cg.vertices}
    seed = [v for v in cg.vertices if not adj[v]]
    sets = _maximal_independent_sets(cg.vertices, adj, seed)
    return sorted((ModuleSum.of(s) for s in sets), key=lambda m: m.summands)


class Direction(Enum):
    UP = "Up"
    DOWN = "Down"


@dataclass(frozen=True)
class MutationResult:
    removed: Interval
    added: Interval
    ses: SesClass
    direction: Direction
    result: ModuleSum

    def to_json(self) -> dict:
        return {"removed": self.removed.to_json(), "added": self.added.to_json(),
                "ses": self.ses.to_json(), "direction": self.direction.value,
                "result": self.result.to_json()}


def mutate(Q: TypeAQuiver, T: ModuleSum, X: Interval) -> MutationResult:
    cg = conflict_graph(Q)
    grid = grid_for(Q)
    if X not in T:
        raise ValueError(f"{X!r} is not a summand of {T!r}")
    if X in grid.boundary:
        raise NonMutableError(f"{X!r} lies on a boundary row and cannot be mutated")
    rest = set(T.summands) - {X}
    candidates = [y for y in cg.vertices if y not in T and cg.is_independent(rest | {y})]
    if len(candidates) != 1:
        raise RuntimeError(f"expected a unique exchange partner for {X!r}, found {candidates}")
    (Y,) = candidates
    up, down = ext_class(grid, Y, X), ext_class(grid, X, Y)
    options = []
    if up is not None and up.kind is SesKind.DIAMOND and set(up.middle) <= rest:
        options.append((up, Direction.UP))
    if down is not None and down.kind is SesKind.DIAMOND and set(down.middle) <= rest:
        options.append((down, Direction.DOWN))
    if len(options) != 1:
        raise RuntimeError(f"expected exactly one exchange sequence between {X!r} and {Y!r}")
    ses, direction = options[0]
    return MutationResult(X, Y, ses, direction, ModuleSum.of(rest | {Y}))


@dataclass(frozen=True)
class HasseEdge:
    lower: int
    upper: int
    removed: Interval
    added: Interval
    ses: SesClass


@dataclass
class MarPoset:
    quiver: TypeAQuiver
    elements: list
    hasse_edges: list
    minimum: int | None
    maximum: int | None
    is_lattice: bool

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "elements": [e.to_json() for e in self.elements],
            "hasse_edges": [{"lower": h.lower, "upper": h.upper, "removed": h.removed.to_json(),
                             "added": h.added.to_json(), "ses": h.ses.to_json()} for h in self.hasse_edges],
            "minimum": self.minimum,
            "maximum": self.maximum,
            "is_lattice": self.is_lattice,
        }

    def to_dot(self) -> str:
        lines = ["digraph Hasse {"]
        for i, e in enumerate(self.elements):
            lines.append(f'  {i} [label="{" ".join(repr(m) for m in e)}"];')
        for h in self.hasse_edges:
            lines.append(f"  {h.lower} -> {h.upper};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _order_closure(k: int, covers: list[tuple[int, int]]) -> list[set]:
    """``above[i]`` = all j with i <= j."""
    succ = [[] for _ in range(k)]
    for a, b in covers:
        succ[a].append(b)
    above = []
    for i in range(k):
        seen, stack = {i}, [i]
        while stack:
            for b in succ[stack.pop()]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        above.append(seen)
    return above


def check_lattice(k: int, covers: list[tuple[int, int]]) -> bool:
    """Every pair has a least upper bound and a greatest lower bound."""
    above = _order_closure(k, covers)
    below = [{j for j in range(k) if i in above[j]} for i in range(k)]
    for i, j in itertools.combinations(range(k), 2):
        ub = above[i] & above[j]
        if not any(ub <= above[u] for u in ub):
            return False
        lb = below[i] & below[j]
        if not any(lb <= below[u] for u in lb):
            return False
    return True


def mar_poset(Q: TypeAQuiver) -> MarPoset:
    mars = enumerate_mar(Q)
    index = {m: i for i, m in enumerate(mars)}
    boundary = grid_for(Q).boundary
    edges = []
    for i, T in enumerate(mars):
        for X in T:
            if X in boundary:
                continue
            res = mutate(Q, T, X)
            if res.direction is Direction.UP:
                edges.append(HasseEdge(i, index[res.result], X, res.added, res.ses))
    covers = [(h.lower, h.upper) for h in edges]
    k = len(mars)
    above = _order_closure(k, covers)
    if any(i in above[j] and j in above[i] for i, j in covers):
        raise RuntimeError("mutation order has a cycle")
    mins = [i for i in range(k) if all(i not in above[j] or j == i for j in range(k))]
    maxs = [i for i in range(k) if above[i] == {i}]
    return MarPoset(Q, mars, edges, mins[0] if len(mins) == 1 else None,
                    maxs[0] if len(maxs) == 1 else None, check_lattice(k, covers))


def mutation_graph(Q: TypeAQuiver) -> nx.Graph:
    poset = mar_poset(Q)
    g = nx.Graph()
    g.add_nodes_from(range(len(poset.elements)))
    g.add_edges_from((h.lower, h.upper) for h in poset.hasse_edges)
    return g


@dataclass(frozen=True)
class Triangulation:
    m: int
    diagonals: frozenset

    def to_json(self) -> list:
        return sorted(list(d) for d in self.diagonals)


def _crossing(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (i, j), (k, l) = a, b
    return (i < k < j < l) or (k < i < l < j)


def polygon_flip_graph(m: int) -> nx.Graph:
    """Triangulations of a convex m-gon (vertices 0..m-1) joined by single flips."""
    if m < 4:
        raise ValueError(f"need a polygon with at least 4 vertices, got {m}")
    chords = [(i, j) for i in range(m) for j in range(i + 2, m) if not (i == 0 and j == m - 1)]
    tris = []

    def extend(chosen, start):
        if len(chosen) == m - 3:
            tris.append(Triangulation(m, frozenset(chosen)))
            return
        for k in range(start, len(chords)):
            c = chords[k]
            if all(not _crossing(c, d) for d in chosen):
                extend(chosen + [c], k + 1)

    extend([], 0)
    g = nx.Graph()
    g.add_nodes_from(tris)
    for s, t in itertools.combinations(tris, 2):
        if len(s.diagonals & t.diagonals) == m - 4:
            g.add_edge(s, t)
    return g


@dataclass
class BijectionResult:
    ok: bool
    mar_count: int
    triangulation_count: int
    certificate: dict

    def to_json(self, elements=None) -> dict:
        cert = []
        for i, t in sorted(self.certificate.items()):
            mod = elements[i].to_json() if elements is not None else i
            cert.append({"mar": mod, "triangulation": t.to_json()})
        return {"ok": self.ok, "mar_count": self.mar_count,
                "triangulation_count": self.triangulation_count, "certificate": cert}


def verify_bijection(Q: TypeAQuiver) -> BijectionResult:
    """Isomorphism between the MAR mutation graph and the (n+1)-gon flip graph."""
    mg = mutation_graph(Q)
    fg = polygon_flip_graph(Q.n + 1)
    gm = GraphMatcher(mg, fg)
    if mg.number_of_nodes() != fg.number_of_nodes() or not gm.is_isomorphic():
        return BijectionResult(False, mg.number_of_nodes(), fg.number_of_nodes(), {})
    mapping = dict(gm.mapping)
    ok = all(fg.has_edge(mapping[a], mapping[b]) for a, b in mg.edges()) and \
        mg.number_of_edges() == fg.number_of_edges()
    return BijectionResult(ok, mg.number_of_nodes(), fg.number_of_nodes(), mapping)


def lattice_extremes_ok(Q: TypeAQuiver, poset: MarPoset) -> tuple[bool, bool]:
    """(minimum holds every P(i), maximum holds every I(i))."""
    lo = poset.elements[poset.minimum] if poset.minimum is not None else ModuleSum.of([])
    hi = poset.elements[poset.maximum] if poset.maximum is not None else ModuleSum.of([])
    return (all(projective(Q, i) in lo for i in Q.vertices),
            all(injective(Q, i) in hi for i in Q.vertices))
