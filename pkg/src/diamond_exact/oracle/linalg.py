"""Exact linear algebra over the rationals and over prime fields.

Matrices are numpy arrays: ``object`` dtype holding ``Fraction`` for the
rationals, ``int64`` reduced mod p for a prime field.  Zero-size shapes are
meaningful (a map out of or into the zero space) and are preserved.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np


class RationalField:
    name = "QQ"
    dtype = object

    def coerce(self, x):
        return Fraction(x)

    def matrix(self, rows, shape=None) -> np.ndarray:
        if shape is not None and (shape[0] == 0 or shape[1] == 0):
            return np.zeros(shape, dtype=object)
        a = np.array(rows, dtype=object)
        if a.ndim == 1:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        out = np.empty(a.shape, dtype=object)
        for idx, v in np.ndenumerate(a):
            out[idx] = Fraction(v)
        return out

    def zeros(self, r: int, c: int) -> np.ndarray:
        out = np.empty((r, c), dtype=object)
        out.fill(Fraction(0))
        return out

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = Fraction(1)
        return out

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] == 0:
            return self.zeros(a.shape[0], b.shape[1])
        return a @ b

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a

    def inv(self, x):
        return 1 / Fraction(x)

    def neg(self, x):
        return -x

    def rref(self, a: np.ndarray) -> tuple[list[list], list[int]]:
        rows = [[Fraction(v) for v in row] for row in a.tolist()]
        return _rref_rows(rows, a.shape[1], lambda x: 1 / x, lambda x: x)

    def __repr__(self) -> str:
        return "QQ"


class PrimeField:
    dtype = np.int64

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"

    def coerce(self, x):
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def matrix(self, rows, shape=None) -> np.ndarray:
        if shape is not None and (shape[0] == 0 or shape[1] == 0):
            return np.zeros(shape, dtype=np.int64)
        a = np.array(rows, dtype=object)
        if a.ndim == 1:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        out = np.zeros(a.shape, dtype=np.int64)
        for idx, v in np.ndenumerate(a):
            out[idx] = self.coerce(v)
        return out

    def zeros(self, r: int, c: int) -> np.ndarray:
        return np.zeros((r, c), dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a @ b) % self.p

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a % self.p

    def inv(self, x):
        return pow(int(x), -1, self.p)

    def neg(self, x):
        return (-int(x)) % self.p

    def rref(self, a: np.ndarray) -> tuple[list[list], list[int]]:
        p = self.p
        rows = [[int(v) % p for v in row] for row in a.tolist()]
        return _rref_rows(rows, a.shape[1], lambda x: pow(x, -1, p), lambda x: x % p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("F", self.p))

    def __repr__(self) -> str:
        return self.name


QQ = RationalField()


def _rref_rows(rows, ncols, inv, norm):
    pivots = []
    r = 0
    m = len(rows)
    for c in range(ncols):
        sel = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        piv = inv(rows[r][c])
        rows[r] = [norm(v * piv) for v in rows[r]]
        prow = rows[r]
        for i in range(m):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    rows[i] = [norm(x - f * y) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[:r], pivots


def rank(F, a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return len(F.rref(a)[1])


def nullspace(F, a: np.ndarray) -> np.ndarray:
    """Columns form a basis of ``{x : a x = 0}``."""
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return F.identity(ncols)
    rows, pivots = F.rref(a)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = F.zeros(ncols, len(free))
    for k, j in enumerate(free):
        basis[j, k] = F.coerce(1)
        for r, c in enumerate(pivots):
            basis[c, k] = F.neg(rows[r][j])
    return basis


def nullspace_rows(F, rows: list[list], ncols: int) -> np.ndarray:
    """Like :func:`nullspace` for a matrix given as a list of rows."""
    if not rows:
        return F.identity(ncols)
    return nullspace(F, F.matrix(rows))


def column_space(F, a: np.ndarray) -> np.ndarray:
    """A basis (as columns) of the column space of ``a``."""
    if a.size == 0:
        return F.zeros(a.shape[0], 0)
    _, pivots = F.rref(a)
    return a[:, pivots]


def solve(F, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Return one ``x`` with ``a x = b``; raise ``ValueError`` if none exists."""
    m, n = a.shape
    k = b.shape[1]
    if m == 0:
        return F.zeros(n, k)
    aug = np.concatenate([a, b], axis=1)
    rows, pivots = F.rref(aug)
    if any(p >= n for p in pivots):
        raise ValueError("inconsistent linear system")
    x = F.zeros(n, k)
    for r, c in enumerate(pivots):
        for j in range(k):
            x[c, j] = rows[r][n + j]
    return x


def left_nullspace(F, a: np.ndarray) -> np.ndarray:
    """Rows form a basis of ``{y : y a = 0}``."""
    return nullspace(F, a.T).T


def complement(F, u: np.ndarray) -> np.ndarray:
    """Standard basis vectors (as columns) completing the columns of ``u``.

    ``u`` must have linearly independent columns.
    """
    m = u.shape[0]
    ident = F.identity(m)
    aug = np.concatenate([u, ident], axis=1)
    _, pivots = F.rref(aug) if aug.size else ([], [])
    extra = [p - u.shape[1] for p in pivots if p >= u.shape[1]]
    return ident[:, extra]


def is_zero(a: np.ndarray) -> bool:
    return all(v == 0 for v in a.flat)


def block_diag(F, blocks: list[np.ndarray]) -> np.ndarray:
    r = sum(b.shape[0] for b in blocks)
    c = sum(b.shape[1] for b in blocks)
    out = F.zeros(r, c)
    i = j = 0
    for b in blocks:
        out[i:i + b.shape[0], j:j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def hstack(F, blocks: list[np.ndarray], rows: int) -> np.ndarray:
    if not blocks:
        return F.zeros(rows, 0)
    return np.concatenate(blocks, axis=1)


def vstack(F, blocks: list[np.ndarray], cols: int) -> np.ndarray:
    if not blocks:
        return F.zeros(0, cols)
    return np.concatenate(blocks, axis=0)
