"""Type A quivers of arbitrary orientation and their interval modules."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable


class QuiverError(ValueError):
    pass


class MarDomainError(ValueError):
    """MAR-layer entry points need n >= 3."""


@dataclass(frozen=True, order=True)
class Interval:
    """The indecomposable supported on the vertex interval [lo, hi]."""
    lo: int
    hi: int

    def __post_init__(self):
        if not 1 <= self.lo <= self.hi:
            raise QuiverError(f"invalid interval [{self.lo},{self.hi}]")

    def __contains__(self, v: int) -> bool:
        return self.lo <= v <= self.hi

    def __iter__(self):
        yield self.lo
        yield self.hi

    @property
    def dim(self) -> int:
        return self.hi - self.lo + 1

    def to_json(self) -> list[int]:
        return [self.lo, self.hi]

    def __repr__(self) -> str:
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class TypeAQuiver:
    n: int
    orientation: str

    def __post_init__(self):
        if self.n < 2:
            raise QuiverError(f"need n >= 2, got {self.n}")
        if len(self.orientation) != self.n - 1:
            raise QuiverError(f"orientation {self.orientation!r} has length {len(self.orientation)}, "
                              f"expected {self.n - 1}")
        if set(self.orientation) - {"R", "L"}:
            raise QuiverError(f"orientation {self.orientation!r} must use only R and L")

    def arrow_right(self, i: int) -> bool:
        """True if the arrow between i and i+1 is i -> i+1."""
        return self.orientation[i - 1] == "R"

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise QuiverError(f"vertex {i} out of range 1..{self.n}")

    def check_interval(self, m: Interval) -> None:
        if m.hi > self.n:
            raise QuiverError(f"interval {m} exceeds n = {self.n}")

    def require_mar_domain(self) -> None:
        if self.n < 3:
            raise MarDomainError(f"MAR theory needs n >= 3, got n = {self.n}")

    def to_json(self) -> dict:
        return {"n": self.n, "orientation": self.orientation}

    def __str__(self) -> str:
        out = "1"
        for i in range(1, self.n):
            out += ("->" if self.arrow_right(i) else "<-") + str(i + 1)
        return out


def build_type_a(n: int, orientation: str) -> TypeAQuiver:
    return TypeAQuiver(n, orientation)


def all_orientations(n: int) -> list[TypeAQuiver]:
    return [TypeAQuiver(n, "".join(w)) for w in itertools.product("RL", repeat=n - 1)]


def projective(Q: TypeAQuiver, i: int) -> Interval:
    """Vertices reachable from i along arrows."""
    Q.check_vertex(i)
    hi = i
    while hi < Q.n and Q.arrow_right(hi):
        hi += 1
    lo = i
    while lo > 1 and not Q.arrow_right(lo - 1):
        lo -= 1
    return Interval(lo, hi)


def injective(Q: TypeAQuiver, i: int) -> Interval:
    """Vertices from which i is reachable."""
    Q.check_vertex(i)
    lo = i
    while lo > 1 and Q.arrow_right(lo - 1):
        lo -= 1
    hi = i
    while hi < Q.n and not Q.arrow_right(hi):
        hi += 1
    return Interval(lo, hi)


def simple(Q: TypeAQuiver, i: int) -> Interval:
    Q.check_vertex(i)
    return Interval(i, i)


def list_indecomposables(Q: TypeAQuiver) -> list[Interval]:
    return [Interval(lo, hi) for lo in range(1, Q.n + 1) for hi in range(lo, Q.n + 1)]


def dimension_vector(Q: TypeAQuiver, m: Interval) -> tuple[int, ...]:
    return tuple(1 if v in m else 0 for v in Q.vertices)


def top(Q: TypeAQuiver, m: Interval) -> list[int]:
    """Vertices of m with no incoming arrow from inside m."""
    out = []
    for v in range(m.lo, m.hi + 1):
        from_left = v > m.lo and Q.arrow_right(v - 1)
        from_right = v < m.hi and not Q.arrow_right(v)
        if not (from_left or from_right):
            out.append(v)
    return out


def radical_name(Q: TypeAQuiver, m: Interval) -> str:
    """Radical filtration display name, e.g. ``3/24/5`` for P(3) on 1->2<-3->4->5."""
    layer = {}
    for v in range(m.lo, m.hi + 1):
        layer[v] = 0
    # longest path inside m ending at v
    changed = True
    while changed:
        changed = False
        for v in range(m.lo, m.hi):
            s, t = (v, v + 1) if Q.arrow_right(v) else (v + 1, v)
            if layer[t] < layer[s] + 1:
                layer[t] = layer[s] + 1
                changed = True
    depth = max(layer.values())
    return "/".join("".join(str(v) for v in sorted(layer) if layer[v] == d) for d in range(depth + 1))


@dataclass(frozen=True)
class ModuleSum:
    """A finite multiset of interval modules, kept sorted."""
    summands: tuple[Interval, ...]

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @classmethod
    def of(cls, items: Iterable[Interval]) -> "ModuleSum":
        return cls(tuple(items))

    @property
    def basic(self) -> bool:
        return len(set(self.summands)) == len(self.summands)

    def __len__(self) -> int:
        return len(set(self.summands))

    def __iter__(self):
        return iter(self.summands)

    def __contains__(self, m) -> bool:
        return m in self.summands

    def to_json(self) -> list[list[int]]:
        return [m.to_json() for m in self.summands]

    def dimension_vector(self, Q: TypeAQuiver) -> tuple[int, ...]:
        vecs = [dimension_vector(Q, m) for m in self.summands]
        return tuple(sum(col) for col in zip(*vecs)) if vecs else (0,) * Q.n

    def __repr__(self) -> str:
        return " + ".join(map(repr, self.summands)) or "0"
