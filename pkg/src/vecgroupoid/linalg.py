"""Exact linear algebra over prime fields GF(p).

Matrices act on column vectors: a linear map GF(p)^n -> GF(p)^m is an
m x n :class:`Matrix`.  Vectors are plain tuples of ints in ``[0, p)``.
Everything is computed with Python ints; there is no floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import BadCoordinate, NoSolution, NotPrime, ShapeMismatch, ZeroInverse

MAX_PRIME = 251

Vector = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(p), 2 <= p <= 251."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise NotPrime(f"field modulus must be an int, got {self.p!r}")
        if not is_prime(self.p) or self.p > MAX_PRIME:
            raise NotPrime(f"{self.p} is not a prime in [2, {MAX_PRIME}]")

    def neg(self, a: int) -> int:
        return (-a) % self.p


def ff_inv(a: int, field: FieldSpec) -> int:
    """Multiplicative inverse of ``a`` modulo ``field.p``."""
    a %= field.p
    if a == 0:
        raise ZeroInverse("0 has no multiplicative inverse")
    return pow(a, field.p - 2, field.p)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[int, ...]
    field: FieldSpec

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        p = self.field.p
        for e in self.entries:
            if not isinstance(e, int) or isinstance(e, bool) or not 0 <= e < p:
                raise BadCoordinate(f"matrix entry {e!r} outside [0, {p})")

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int]], field: FieldSpec, cols: int | None = None
    ) -> "Matrix":
        """Build from a list of rows.  ``cols`` is required when there are no rows."""
        rows = [[int(e) for e in r] for r in rows]
        if cols is None:
            if not rows:
                raise ShapeMismatch("cannot infer column count of a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ShapeMismatch(f"ragged row of length {len(r)}, expected {cols}")
        return cls(len(rows), cols, tuple(e for r in rows for e in r), field)

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[int]], field: FieldSpec, rows: int
    ) -> "Matrix":
        return cls.from_rows(
            [[c[i] for c in columns] for i in range(rows)], field, cols=len(columns)
        )

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Matrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> "Matrix":
        return cls(rows, cols, (0,) * (rows * cols), field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    @cached_property
    def array(self) -> np.ndarray:
        """Read-only int64 view used by the vectorised enumeration code."""
        a = np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)
        a.flags.writeable = False
        return a

    def apply(self, v: Sequence[int]) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ShapeMismatch(f"vector of length {len(v)} for {self.rows}x{self.cols} matrix")
        p = self.field.p
        return tuple(
            sum(a * b for a, b in zip(self.row(i), v)) % p for i in range(self.rows)
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        p = self.field.p
        return Matrix(self.rows, self.cols,
                      tuple((a + b) % p for a, b in zip(self.entries, other.entries)), self.field)

    def __neg__(self) -> "Matrix":
        return self.scale(self.field.p - 1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, k: int) -> "Matrix":
        p = self.field.p
        return Matrix(self.rows, self.cols, tuple(k * e % p for e in self.entries), self.field)

    def transpose(self) -> "Matrix":
        return Matrix.from_columns([self.row(i) for i in range(self.rows)], self.field, self.cols)

    def __repr__(self) -> str:
        return f"Matrix({self.tolist()}, p={self.field.p}, shape={self.rows}x{self.cols})"


def _same_shape(a: Matrix, b: Matrix) -> None:
    if a.field != b.field:
        raise ShapeMismatch(f"field mismatch: GF({a.field.p}) vs GF({b.field.p})")
    if a.shape != b.shape:
        raise ShapeMismatch(f"shape mismatch: {a.shape} vs {b.shape}")


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.field != b.field:
        raise ShapeMismatch(f"field mismatch: GF({a.field.p}) vs GF({b.field.p})")
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    p = a.field.p
    cols_b = [b.column(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.row(i)
        out.extend(sum(x * y for x, y in zip(r, c)) % p for c in cols_b)
    return Matrix(a.rows, b.cols, tuple(out), a.field)


def vstack(blocks: Iterable[Matrix]) -> Matrix:
    blocks = list(blocks)
    cols = {m.cols for m in blocks}
    if len(cols) != 1:
        raise ShapeMismatch(f"vstack of matrices with column counts {sorted(cols)}")
    rows = [m.row(i) for m in blocks for i in range(m.rows)]
    return Matrix.from_rows(rows, blocks[0].field, cols=cols.pop())


def hstack(blocks: Iterable[Matrix]) -> Matrix:
    blocks = list(blocks)
    nrows = {m.rows for m in blocks}
    if len(nrows) != 1:
        raise ShapeMismatch(f"hstack of matrices with row counts {sorted(nrows)}")
    n = nrows.pop()
    rows = [sum((m.row(i) for m in blocks), ()) for i in range(n)]
    return Matrix.from_rows(rows, blocks[0].field, cols=sum(m.cols for m in blocks))


def block(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    return vstack(hstack(r) for r in grid)


def _row_reduce(rows: list[list[int]], p: int, ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns).  Mutates ``rows``."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [e * inv % p for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def mat_rank(a: Matrix) -> int:
    _, pivots = _row_reduce(a.tolist(), a.field.p, a.cols)
    return len(pivots)


def kernel_basis(a: Matrix) -> list[Vector]:
    """Basis of the null space, one vector per free column (ascending)."""
    p = a.field.p
    rref, pivots = _row_reduce(a.tolist(), p, a.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        v = [0] * a.cols
        v[free] = 1
        for r, c in enumerate(pivots):
            v[c] = (-rref[r][free]) % p
        basis.append(tuple(v))
    return basis


def solve_linear(a: Matrix, b: Sequence[int]) -> Vector:
    """Some ``x`` with ``a @ x == b``; free variables are set to 0.

    Raises :class:`NoSolution` when ``b`` is outside the column space.
    """
    if len(b) != a.rows:
        raise ShapeMismatch(f"right-hand side of length {len(b)} for {a.rows} equations")
    p = a.field.p
    aug = [list(a.row(i)) + [b[i] % p] for i in range(a.rows)]
    rref, pivots = _row_reduce(aug, p, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        raise NoSolution(f"{tuple(b)} is not in the image of the matrix")
    x = [0] * a.cols
    for r, c in enumerate(pivots):
        x[c] = rref[r][a.cols]
    return tuple(x)


def columns_matrix(vectors: Sequence[Sequence[int]], field: FieldSpec, dim: int) -> Matrix:
    """The ``dim x len(vectors)`` matrix whose columns are ``vectors``."""
    return Matrix.from_columns(vectors, field, dim)


def left_inverse(b: Matrix) -> Matrix:
    """``L`` with ``L @ b == I`` for a matrix of full column rank."""
    bt = b.transpose()
    cols = []
    for j in range(b.cols):
        e = [0] * b.cols
        e[j] = 1
        cols.append(solve_linear(bt, e))
    # rows of L are the solutions x_j with b^T x_j = e_j
    return Matrix.from_rows(cols, b.field, cols=b.rows)
