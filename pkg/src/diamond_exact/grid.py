"""The AR quiver of a type A quiver embedded in Z x [n], with Hom/Ext read off coordinates."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .quiver import Interval, ModuleSum, QuiverError, TypeAQuiver, injective, projective, radical_name

DIRECTIONS = {"NE": (1, 1), "SE": (1, -1), "SW": (-1, -1), "NW": (-1, 1)}


@dataclass(frozen=True, order=True)
class GridPoint:
    x: int
    y: int

    def shift(self, dx: int, dy: int) -> "GridPoint":
        return GridPoint(self.x + dx, self.y + dy)


class PairKind(Enum):
    NON_RECTANGULAR = "NonRectangular"
    RECTANGULAR_DEGENERATE = "RectangularDegenerate"
    RECTANGULAR_NON_DEGENERATE = "RectangularNonDegenerate"
    LOWER_DELETED = "LowerDeleted"
    UPPER_DELETED = "UpperDeleted"


@dataclass(frozen=True)
class PairClass:
    kind: PairKind
    e1: Interval | None = None
    e2: Interval | None = None
    e: Interval | None = None

    @property
    def rectangular(self) -> bool:
        return self.kind in (PairKind.RECTANGULAR_DEGENERATE, PairKind.RECTANGULAR_NON_DEGENERATE)

    @property
    def deleted(self) -> bool:
        return self.kind in (PairKind.LOWER_DELETED, PairKind.UPPER_DELETED)


class SesKind(Enum):
    SPLIT = "Split"
    DIAMOND = "Diamond"
    INDECOMPOSABLE_MIDDLE = "IndecomposableMiddle"


@dataclass(frozen=True)
class SesClass:
    """Class of ``0 -> sub -> middle -> quot -> 0`` with indecomposable end terms."""
    sub: Interval
    middle: ModuleSum
    quot: Interval
    kind: SesKind

    @classmethod
    def split(cls, sub: Interval, quot: Interval) -> "SesClass":
        return cls(sub, ModuleSum.of([sub, quot]), quot, SesKind.SPLIT)

    def to_json(self) -> dict:
        return {"sub": self.sub.to_json(), "middle": self.middle.to_json(),
                "quot": self.quot.to_json(), "kind": self.kind.value}

    def __str__(self) -> str:
        return f"0 -> {self.sub!r} -> {self.middle!r} -> {self.quot!r} -> 0"


@dataclass(frozen=True)
class ARGrid:
    quiver: TypeAQuiver
    positions: dict
    at: dict
    arrows: frozenset
    tau_map: dict
    orbit_rows: tuple
    memo: dict = field(default_factory=dict, compare=False, repr=False)

    def position(self, m: Interval) -> GridPoint:
        try:
            return self.positions[m]
        except KeyError:
            raise QuiverError(f"unknown interval {m!r}") from None

    def row(self, i: int) -> tuple[Interval, ...]:
        return self.orbit_rows[i - 1]

    @property
    def boundary(self) -> frozenset:
        """L_1 together with L_n."""
        return frozenset(self.row(1)) | frozenset(self.row(self.quiver.n))

    @property
    def projectives(self) -> tuple[Interval, ...]:
        return tuple(projective(self.quiver, i) for i in self.quiver.vertices)

    @property
    def injectives(self) -> tuple[Interval, ...]:
        return tuple(injective(self.quiver, i) for i in self.quiver.vertices)

    def modules(self) -> list[Interval]:
        return sorted(self.positions)

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "positions": [{"module": m.to_json(), "x": p.x, "y": p.y, "name": radical_name(self.quiver, m)}
                          for m, p in sorted(self.positions.items(), key=lambda kv: (kv[1].y, kv[1].x))],
            "arrows": [[a.to_json(), b.to_json()] for a, b in sorted(self.arrows)],
            "tau": [[m.to_json(), t.to_json()] for m, t in sorted(self.tau_map.items())],
            "orbit_rows": [[m.to_json() for m in row] for row in self.orbit_rows],
        }

    def to_dot(self) -> str:
        lines = ["digraph AR {", "  node [shape=plaintext];"]
        for m, p in sorted(self.positions.items(), key=lambda kv: (kv[1].y, kv[1].x)):
            lines.append(f'  "{m.lo},{m.hi}" [label="{radical_name(self.quiver, m)}", pos="{p.x},{p.y}!"];')
        for a, b in sorted(self.arrows):
            lines.append(f'  "{a.lo},{a.hi}" -> "{b.lo},{b.hi}";')
        for m, t in sorted(self.tau_map.items()):
            lines.append(f'  "{m.lo},{m.hi}" -> "{t.lo},{t.hi}" [style=dashed, constraint=false];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _as_interval(dims: list[int]) -> Interval:
    support = [i + 1 for i, d in enumerate(dims) if d]
    if any(d not in (0, 1) for d in dims) or not support or support[-1] - support[0] + 1 != len(support):
        raise RuntimeError(f"knitting produced a non-interval dimension vector {dims}")
    return Interval(support[0], support[-1])


def build_ar_grid(Q: TypeAQuiver) -> ARGrid:
    """Knit the AR quiver from the projectives with the mesh rule on dimension vectors."""
    n = Q.n
    xs = [0]
    for i in range(1, n):
        xs.append(xs[-1] - 1 if Q.arrow_right(i) else xs[-1] + 1)
    shift = -min(xs)
    at: dict[GridPoint, Interval] = {}
    for i in Q.vertices:
        at[GridPoint(xs[i - 1] + shift, i)] = projective(Q, i)
    injectives = {injective(Q, i) for i in Q.vertices}

    def dims(p: GridPoint) -> list[int]:
        m = at.get(p)
        return [1 if v in m else 0 for v in Q.vertices] if m else [0] * n

    x = 0
    while any(p.x >= x for p in at):
        for p in sorted(q for q in at if q.x == x):
            m = at[p]
            if m in injectives:
                continue
            up, down = dims(p.shift(1, 1)), dims(p.shift(1, -1))
            new = [u + d - e for u, d, e in zip(up, down, dims(p))]
            at[p.shift(2, 0)] = _as_interval(new)
        x += 1
    positions = {m: p for p, m in at.items()}
    if len(positions) != len(at) or len(at) != n * (n + 1) // 2:
        raise RuntimeError("knitting did not produce each interval exactly once")
    arrows = set()
    for p, m in at.items():
        for dy in (1, -1):
            q = p.shift(1, dy)
            if q in at:
                arrows.add((m, at[q]))
    tau_map = {}
    for p, m in at.items():
        q = p.shift(-2, 0)
        if q in at:
            tau_map[m] = at[q]
    rows = tuple(tuple(at[p] for p in sorted(q for q in at if q.y == i)) for i in Q.vertices)
    return ARGrid(Q, positions, at, frozenset(arrows), tau_map, rows)


def tau(grid: ARGrid, m: Interval) -> Interval | None:
    grid.position(m)
    return grid.tau_map.get(m)


def tau_inverse(grid: ARGrid, m: Interval) -> Interval | None:
    p = grid.position(m)
    return grid.at.get(p.shift(2, 0))


def ray(grid: ARGrid, m: Interval, direction: str) -> list[Interval]:
    """Modules on the ray or coray from ``m`` in ``direction`` (NE, SE, SW, NW), starting with ``m``."""
    try:
        dx, dy = DIRECTIONS[direction]
    except KeyError:
        raise ValueError(f"unknown direction {direction!r}") from None
    p = grid.position(m)
    out = [m]
    while (p := p.shift(dx, dy)) in grid.at:
        out.append(grid.at[p])
    return out


def end_of_ray(grid: ARGrid, m: Interval, direction: str) -> Interval:
    return ray(grid, m, direction)[-1]


def meet(grid: ARGrid, m: Interval, d1: str, n: Interval, d2: str) -> Interval | None:
    """The module on both the ray of ``m`` toward ``d1`` and the ray of ``n`` toward ``d2``."""
    common = set(ray(grid, m, d1)) & set(ray(grid, n, d2))
    return common.pop() if common else None


def classify_pair(grid: ARGrid, m: Interval, n: Interval) -> PairClass:
    key = ("pair", m, n)
    if key not in grid.memo:
        grid.memo[key] = _classify_pair(grid, m, n)
    return grid.memo[key]


def _classify_pair(grid: ARGrid, m: Interval, n: Interval) -> PairClass:
    pm, pn = grid.position(m), grid.position(n)
    e1 = meet(grid, m, "NE", n, "NW")
    e2 = meet(grid, m, "SE", n, "SW")
    if e1 is not None and e2 is not None:
        if pn.x - pm.x == abs(pn.y - pm.y):
            return PairClass(PairKind.RECTANGULAR_DEGENERATE, e1=e1, e2=e2)
        return PairClass(PairKind.RECTANGULAR_NON_DEGENERATE, e1=e1, e2=e2)
    if e1 is not None:
        low = tau_inverse(grid, end_of_ray(grid, m, "SE"))
        if low is not None and low == end_of_ray(grid, n, "SW"):
            return PairClass(PairKind.LOWER_DELETED, e=e1)
    if e2 is not None:
        high = tau_inverse(grid, end_of_ray(grid, m, "NE"))
        if high is not None and high == end_of_ray(grid, n, "NW"):
            return PairClass(PairKind.UPPER_DELETED, e=e2)
    return PairClass(PairKind.NON_RECTANGULAR)


def hom_dim(grid: ARGrid, m: Interval, n: Interval) -> int:
    return 1 if classify_pair(grid, m, n).rectangular else 0


def ext_class(grid: ARGrid, n: Interval, m: Interval) -> SesClass | None:
    """The nonsplit class spanning Ext^1(n, m), or None when it vanishes."""
    pc = classify_pair(grid, m, n)
    if pc.kind is PairKind.RECTANGULAR_NON_DEGENERATE:
        return SesClass(m, ModuleSum.of([pc.e1, pc.e2]), n, SesKind.DIAMOND)
    if pc.deleted:
        return SesClass(m, ModuleSum.of([pc.e]), n, SesKind.INDECOMPOSABLE_MIDDLE)
    return None


def _rectangle(grid: ARGrid, m: Interval, d1: str, d2: str) -> set[Interval]:
    width = len(ray(grid, m, d2))
    out = set()
    for a in ray(grid, m, d1):
        out.update(ray(grid, a, d2)[:width])
    return out


def region_right(grid: ARGrid, m: Interval) -> set[Interval]:
    """Modules in the slanted rectangle whose left sides are the rays NE and SE of ``m``."""
    return _rectangle(grid, m, "NE", "SE")


def region_left(grid: ARGrid, m: Interval) -> set[Interval]:
    return _rectangle(grid, m, "NW", "SW")


def diamond_capable(grid: ARGrid, m: Interval) -> tuple[bool, bool]:
    """(as_quotient, as_sub): whether some diamond sequence has ``m`` at that end."""
    edge = m in grid.boundary
    return (not edge and m not in grid.projectives, not edge and m not in grid.injectives)


def projective_hammock(grid: ARGrid, i: int) -> tuple[Interval, Interval, SesClass | None]:
    """Corners of the rectangle from P(i): E1 on L_1, E2 on L_n, and the diamond to I(i) if any."""
    Q = grid.quiver
    Q.check_vertex(i)
    p = projective(Q, i)
    e1 = end_of_ray(grid, p, "SE")
    e2 = end_of_ray(grid, p, "NE")
    assert e1 in grid.row(1) and e2 in grid.row(Q.n), "hammock corners left the boundary rows"
    if 1 < i < Q.n:
        return e1, e2, SesClass(p, ModuleSum.of([e1, e2]), injective(Q, i), SesKind.DIAMOND)
    return e1, e2, None


def all_pairs(grid: ARGrid) -> Iterable[tuple[Interval, Interval]]:
    mods = grid.modules()
    return ((a, b) for a in mods for b in mods)
