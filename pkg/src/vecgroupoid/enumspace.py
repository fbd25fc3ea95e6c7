"""Finite vector spaces GF(p)^n and their element encoding.

Element ``v`` of GF(p)^n is named by the little-endian base-p index
``sum(v[j] * p**j)``.  The encoding is part of the on-disk table format.

Besides the scalar converters there are vectorised helpers operating on
numpy arrays of indices; the law checkers use those to sweep whole spaces.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import BadCoordinate, CapExceeded, IndexOutOfRange, ShapeMismatch
from .linalg import FieldSpec, Matrix, Vector

DEFAULT_CAP = 1 << 16
# quantifying over triples of V, or over pairs of V, must stay below this
TRIPLE_CAP = 1 << 27
PAIR_CAP = 1 << 24


def enumeration_cap() -> int:
    """Largest enumerable space size; ``VG_CAP`` overrides the default."""
    raw = os.environ.get("VG_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise CapExceeded(f"VG_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise CapExceeded(f"VG_CAP must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class SpaceRef:
    dim: int
    field: FieldSpec

    def __post_init__(self):
        if self.dim < 0:
            raise ShapeMismatch(f"negative dimension {self.dim}")
        cap = enumeration_cap()
        if self.field.p ** self.dim > cap:
            raise CapExceeded(
                f"GF({self.field.p})^{self.dim} has {self.field.p ** self.dim} elements, cap is {cap}"
            )

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def size(self) -> int:
        return self.field.p ** self.dim

    @cached_property
    def powers(self) -> np.ndarray:
        return self.field.p ** np.arange(self.dim, dtype=np.int64)

    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)

    def require_pairs(self) -> None:
        if self.size ** 2 > PAIR_CAP:
            raise CapExceeded(f"|V|^2 = {self.size ** 2} exceeds pair cap {PAIR_CAP}")

    def require_triples(self) -> None:
        if self.size ** 3 > TRIPLE_CAP:
            raise CapExceeded(f"|V|^3 = {self.size ** 3} exceeds triple cap {TRIPLE_CAP}")

    def __repr__(self) -> str:
        return f"GF({self.field.p})^{self.dim}"


def index_to_vector(idx: int, space: SpaceRef) -> Vector:
    if not 0 <= idx < space.size:
        raise IndexOutOfRange(f"index {idx} outside [0, {space.size}) for {space!r}")
    p = space.p
    out = []
    for _ in range(space.dim):
        idx, d = divmod(idx, p)
        out.append(d)
    return tuple(out)


def vector_to_index(v: Sequence[int], space: SpaceRef) -> int:
    if len(v) != space.dim:
        raise BadCoordinate(f"vector of length {len(v)} in {space!r}")
    p = space.p
    idx = 0
    for d in reversed(v):
        if not 0 <= d < p:
            raise BadCoordinate(f"coordinate {d} outside [0, {p})")
        idx = idx * p + d
    return idx


def enumerate_span(basis: Iterable[Sequence[int]], space: SpaceRef) -> list[int]:
    """Sorted indices of every element in the span of ``basis``."""
    p = space.p
    span = {0}
    for b in basis:
        vector_to_index(b, space)  # validates
        b = np.asarray(b, dtype=np.int64)
        current = np.array(sorted(span), dtype=np.int64)
        vecs = digits(current, space)
        for k in range(1, p):
            span.update(undigits((vecs + k * b) % p, space).tolist())
    return sorted(span)


# -- vectorised index arithmetic ------------------------------------------

def digits(indices: np.ndarray, space: SpaceRef) -> np.ndarray:
    """``(N, dim)`` coordinate array of an index array."""
    indices = np.asarray(indices, dtype=np.int64)
    return (indices[..., None] // space.powers) % space.p


def undigits(vecs: np.ndarray, space: SpaceRef) -> np.ndarray:
    return (np.asarray(vecs, dtype=np.int64) % space.p) @ space.powers


def add(a: np.ndarray, b: np.ndarray, space: SpaceRef) -> np.ndarray:
    return undigits(digits(a, space) + digits(b, space), space)


def sub(a: np.ndarray, b: np.ndarray, space: SpaceRef) -> np.ndarray:
    return undigits(digits(a, space) - digits(b, space), space)


def scale(k, a: np.ndarray, space: SpaceRef) -> np.ndarray:
    """``k * a``; ``k`` may be a scalar or an array broadcastable against ``a``."""
    k = np.asarray(k, dtype=np.int64) % space.p
    return undigits(k[..., None] * digits(a, space), space)


def apply_matrix(m: Matrix, indices: np.ndarray, src: SpaceRef, dst: SpaceRef) -> np.ndarray:
    """Image of each index under ``m`` (a ``dst.dim x src.dim`` matrix)."""
    if m.shape != (dst.dim, src.dim):
        raise ShapeMismatch(f"{m.rows}x{m.cols} matrix cannot map {src!r} to {dst!r}")
    return undigits(digits(indices, src) @ m.array.T, dst)


def image_table(m: Matrix, src: SpaceRef, dst: SpaceRef) -> np.ndarray:
    """Lookup array ``t`` with ``t[x] = m(x)`` for every ``x`` of ``src``."""
    return apply_matrix(m, src.elements(), src, dst)
