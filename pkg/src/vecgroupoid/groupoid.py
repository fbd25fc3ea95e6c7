"""Vector groupoids over GF(p): data model, partial multiplication, isotropy.

A :class:`VectorGroupoid` stores its structure maps (source, target, unit
inclusion, inversion) as matrices and delegates the partial multiplication to
a backend.  Elements are named by their enumspace index.

Two evaluation paths exist on purpose.  :func:`compose` and
:func:`apply_structure` work element by element in plain Python; the
``tables`` of a groupoid sweep whole spaces with numpy.  The law checkers
find violations with the tables and replay every witness through the scalar
path.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import TYPE_CHECKING, ClassVar, Mapping

import numpy as np

from . import enumspace as es
from .enumspace import SpaceRef, index_to_vector, vector_to_index
from .errors import (
    AmbientEscape,
    IndexOutOfRange,
    NoSolution,
    NotAGroup,
    NotAnIsomorphism,
    NotComposable,
    ShapeMismatch,
    TableExtraneous,
    TableIncomplete,
)
from .linalg import FieldSpec, Matrix, solve_linear

if TYPE_CHECKING:
    from collections.abc import Iterator

UNDEFINED = -1


# -- multiplication backends ----------------------------------------------

class Backend:
    """Strategy for the partial multiplication of a groupoid.

    ``compose_one`` handles a single composable pair; ``compose_many``
    handles arrays of composable pairs.  Callers guarantee composability.
    """

    kind: ClassVar[str]

    def validate(self, g: "VectorGroupoid") -> None:
        pass

    def compose_one(self, g: "VectorGroupoid", x: int, y: int) -> int:
        raise NotImplementedError

    def compose_many(self, g: "VectorGroupoid", xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        raise NotImplementedError


@dataclass(frozen=True)
class TableRule(Backend):
    """Extensional multiplication: one entry per composable pair."""

    entries: Mapping[tuple[int, int], int]
    kind: ClassVar[str] = "table"

    def __post_init__(self):
        object.__setattr__(self, "entries", dict(self.entries))

    def __hash__(self):
        return hash(tuple(sorted(self.entries.items())))

    def validate(self, g):
        g.V.require_pairs()
        n = g.V.size
        for (x, y), xy in self.entries.items():
            for e in (x, y, xy):
                if not 0 <= e < n:
                    raise IndexOutOfRange(f"table entry {[x, y, xy]} names element {e} outside [0, {n})")
        t = g.tables
        for (x, y) in self.entries:
            if t.beta[x] != t.alpha[y]:
                raise TableExtraneous((x, y))
        expected = int(np.sum(t.composable_count_by_base()))
        if len(self.entries) != expected:
            for pair in g.iter_composable_pairs():
                if pair not in self.entries:
                    raise TableIncomplete(pair)

    def compose_one(self, g, x, y):
        try:
            return self.entries[(x, y)]
        except KeyError:
            raise TableIncomplete((x, y)) from None

    def compose_many(self, g, xs, ys):
        out = np.empty(len(xs), dtype=np.int64)
        for i, (x, y) in enumerate(zip(xs.tolist(), ys.tolist())):
            out[i] = self.compose_one(g, x, y)
        return out


@dataclass(frozen=True)
class NullRule(Backend):
    """``x . x = x``.  Whenever a product is defined the result is the left factor."""

    kind: ClassVar[str] = "null"

    def validate(self, g):
        if g.V.dim != g.V0.dim:
            raise ShapeMismatch("null groupoid needs total and base spaces of equal dimension")

    def compose_one(self, g, x, y):
        return x

    def compose_many(self, g, xs, ys):
        return np.asarray(xs, dtype=np.int64).copy()


@dataclass(frozen=True)
class SingleUnitRule(Backend):
    """Multiplication is vector addition."""

    kind: ClassVar[str] = "single_unit"

    def validate(self, g):
        if g.V0.dim != 0:
            raise ShapeMismatch("single-unit groupoid needs a zero-dimensional base")

    def compose_one(self, g, x, y):
        p = g.field.p
        a, b = index_to_vector(x, g.V), index_to_vector(y, g.V)
        return vector_to_index(tuple((s + t) % p for s, t in zip(a, b)), g.V)

    def compose_many(self, g, xs, ys):
        return es.add(xs, ys, g.V)


@dataclass(frozen=True)
class PairRule(Backend):
    """``(x, y) . (y, z) = (x, z)`` on X + X, first block in the low digits."""

    kind: ClassVar[str] = "pair"

    def validate(self, g):
        if g.V.dim != 2 * g.V0.dim:
            raise ShapeMismatch("pair groupoid needs dim V = 2 dim V0")

    def compose_one(self, g, x, y):
        n = g.V0.dim
        a, b = index_to_vector(x, g.V), index_to_vector(y, g.V)
        return vector_to_index(a[:n] + b[n:], g.V)

    def compose_many(self, g, xs, ys):
        n = g.V0.dim
        dx, dy = es.digits(xs, g.V), es.digits(ys, g.V)
        return es.undigits(np.concatenate([dx[:, :n], dy[:, n:]], axis=1), g.V)


@dataclass(frozen=True)
class InducedRule(Backend):
    """Pullback multiplication ``(x, y, a) . (y, z, b) = (x, z, a . b)``.

    Elements are coordinates with respect to ``basis`` (columns are vectors
    of the ambient space X + X + V).  ``left`` is a left inverse of ``basis``.
    """

    parent: "VectorGroupoid"
    h: Matrix
    basis: Matrix
    left: Matrix
    kind: ClassVar[str] = "induced"

    @property
    def x_dim(self) -> int:
        return self.h.cols

    def to_ambient(self, g, idx: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        w = self.basis.apply(index_to_vector(idx, g.V))
        n = self.x_dim
        return w[:n], w[n:2 * n], w[2 * n:]

    def from_ambient(self, g, x, y, a) -> int:
        try:
            c = solve_linear(self.basis, tuple(x) + tuple(y) + tuple(a))
        except NoSolution:
            raise AmbientEscape(f"ambient triple {(tuple(x), tuple(y), tuple(a))} is not in the pullback") from None
        return vector_to_index(c, g.V)

    def compose_one(self, g, x, y):
        x1, _, a = self.to_ambient(g, x)
        _, z2, b = self.to_ambient(g, y)
        pv = self.parent.V
        try:
            ab = compose(self.parent, vector_to_index(a, pv), vector_to_index(b, pv))
        except NotComposable as exc:
            raise AmbientEscape(f"third components are not composable in the parent: {exc}") from None
        return self.from_ambient(g, x1, z2, index_to_vector(ab, pv))

    def compose_many(self, g, xs, ys):
        n = self.x_dim
        b = self.basis.array
        wx = es.digits(xs, g.V) @ b.T % g.field.p
        wy = es.digits(ys, g.V) @ b.T % g.field.p
        pv = self.parent.V
        a = es.undigits(wx[:, 2 * n:], pv)
        bb = es.undigits(wy[:, 2 * n:], pv)
        ab = self.parent.tables.product_ext[a, bb]
        if np.any(ab == UNDEFINED):
            raise AmbientEscape("third components are not composable in the parent")
        w = np.concatenate([wx[:, :n], wy[:, n:2 * n], es.digits(ab, pv)], axis=1)
        coords = w @ self.left.array.T % g.field.p
        if np.any(coords @ b.T % g.field.p != w):
            raise AmbientEscape("product left the pullback space")
        return es.undigits(coords, g.V)


# -- the groupoid ----------------------------------------------------------

STRUCTURE_MAPS = ("source", "target", "unit", "invert")


@dataclass(frozen=True, eq=True)
class VectorGroupoid:
    """The tuple (V, source, target, multiplication, unit, inversion, V0)."""

    field: FieldSpec
    V: SpaceRef
    V0: SpaceRef
    alpha: Matrix
    beta: Matrix
    epsilon: Matrix
    inversion: Matrix
    mult: Backend

    def __post_init__(self):
        n, n0 = self.V.dim, self.V0.dim
        expected = {
            "alpha": (n0, n), "beta": (n0, n), "epsilon": (n, n0), "inversion": (n, n),
        }
        for name, shape in expected.items():
            m = getattr(self, name)
            if m.shape != shape:
                raise ShapeMismatch(f"{name} is {m.rows}x{m.cols}, expected {shape[0]}x{shape[1]}")
            if m.field != self.field:
                raise ShapeMismatch(f"{name} is over GF({m.field.p}), expected GF({self.field.p})")
        if self.V.field != self.field or self.V0.field != self.field:
            raise ShapeMismatch("spaces and groupoid disagree on the field")
        self.mult.validate(self)

    def __hash__(self):
        return hash((self.field, self.V, self.V0, self.alpha, self.beta,
                     self.epsilon, self.inversion, self.mult))

    @property
    def kind(self) -> str:
        return self.mult.kind

    @cached_property
    def tables(self) -> "Tables":
        return Tables(self)

    def iter_composable_pairs(self) -> "Iterator[tuple[int, int]]":
        t = self.tables
        fib = t.alpha_fibres
        for x in range(self.V.size):
            for y in fib[t.beta[x]]:
                yield x, int(y)

    def structure_matrix(self, name: str) -> Matrix:
        return {"source": self.alpha, "target": self.beta,
                "unit": self.epsilon, "invert": self.inversion}[name]


class Tables:
    """Whole-space lookup arrays for a groupoid, built once on demand."""

    def __init__(self, g: VectorGroupoid):
        self.g = g
        self.alpha = es.image_table(g.alpha, g.V, g.V0)
        self.beta = es.image_table(g.beta, g.V, g.V0)
        self.eps = es.image_table(g.epsilon, g.V0, g.V)
        self.inv = es.image_table(g.inversion, g.V, g.V)
        self.isotropy_cache: dict[int, IsotropyGroup] = {}

    @cached_property
    def alpha_fibres(self) -> list[np.ndarray]:
        return _fibres(self.alpha, self.g.V0.size)

    @cached_property
    def beta_fibres(self) -> list[np.ndarray]:
        return _fibres(self.beta, self.g.V0.size)

    def composable_count_by_base(self) -> np.ndarray:
        n0 = self.g.V0.size
        return (np.bincount(self.beta, minlength=n0).astype(np.int64)
                * np.bincount(self.alpha, minlength=n0))

    @cached_property
    def product_ext(self) -> np.ndarray:
        """``(n+1, n+1)`` product table, UNDEFINED off the composable pairs.

        The extra last row and column are UNDEFINED, so indexing with
        UNDEFINED (-1) propagates undefinedness through nested products.
        """
        g = self.g
        g.V.require_pairs()
        n = g.V.size
        out = np.full((n + 1, n + 1), UNDEFINED, dtype=np.int64)
        mask = self.beta[:, None] == self.alpha[None, :]
        xs, ys = np.nonzero(mask)
        if len(xs):
            out[xs, ys] = g.mult.compose_many(g, xs.astype(np.int64), ys.astype(np.int64))
        out.flags.writeable = False
        return out

    @property
    def product(self) -> np.ndarray:
        n = self.g.V.size
        return self.product_ext[:n, :n]


def _fibres(values: np.ndarray, n0: int) -> list[np.ndarray]:
    order = np.argsort(values, kind="stable")
    bounds = np.searchsorted(values[order], np.arange(n0 + 1))
    return [order[bounds[u]:bounds[u + 1]] for u in range(n0)]


# -- element-level operations ---------------------------------------------

def apply_structure(g: VectorGroupoid, map_name: str, e: int) -> int:
    """Apply source/target/unit/invert to one element."""
    if map_name not in STRUCTURE_MAPS:
        raise ValueError(f"unknown structure map {map_name!r}; expected one of {STRUCTURE_MAPS}")
    src = g.V0 if map_name == "unit" else g.V
    dst = g.V0 if map_name in ("source", "target") else g.V
    v = index_to_vector(e, src)
    return vector_to_index(g.structure_matrix(map_name).apply(v), dst)


def compose(g: VectorGroupoid, x: int, y: int) -> int:
    bx = apply_structure(g, "target", x)
    ay = apply_structure(g, "source", y)
    if bx != ay:
        raise NotComposable(x, y, bx, ay)
    return g.mult.compose_one(g, x, y)


def composable_pairs(g: VectorGroupoid) -> list[tuple[int, int]]:
    """All composable pairs in ascending lexicographic order."""
    g.V.require_pairs()
    return list(g.iter_composable_pairs())


def add_elements(g: VectorGroupoid, *xs: int, coeffs: tuple[int, ...] | None = None) -> int:
    """Linear combination of elements of V (scalar path)."""
    p = g.field.p
    coeffs = coeffs or (1,) * len(xs)
    acc = [0] * g.V.dim
    for k, x in zip(coeffs, xs):
        for j, d in enumerate(index_to_vector(x, g.V)):
            acc[j] = (acc[j] + k * d) % p
    return vector_to_index(acc, g.V)


# -- isotropy ---------------------------------------------------------------

@dataclass(frozen=True)
class IsotropyGroup:
    """The group of arrows from ``base`` to itself.

    ``table[i, j]`` is the local index of ``elements[i] . elements[j]``.
    """

    base: int
    elements: tuple[int, ...]
    unit: int
    table: np.ndarray = dc_field(compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def local(self, e: int) -> int:
        return self.elements.index(e)


def isotropy_elements(g: VectorGroupoid, u: int) -> np.ndarray:
    t = g.tables
    return np.nonzero((t.alpha == u) & (t.beta == u))[0].astype(np.int64)


def isotropy_group(g: VectorGroupoid, u: int) -> IsotropyGroup:
    """Build and verify the isotropy group at ``u``.

    Raises :class:`NotAGroup` with a witness when closure, the unit law,
    inverses or associativity fail.
    """
    if not 0 <= u < g.V0.size:
        raise IndexOutOfRange(f"base point {u} outside [0, {g.V0.size})")
    t = g.tables
    if u in t.isotropy_cache:
        return t.isotropy_cache[u]
    elems = isotropy_elements(g, u)
    m = len(elems)
    unit = int(t.eps[u])
    if unit not in set(elems.tolist()):
        raise NotAGroup(f"unit of {u} is not in the isotropy group", (unit,))
    P = t.product_ext
    sub = P[np.ix_(elems, elems)]
    local = np.full(g.V.size + 1, UNDEFINED, dtype=np.int64)
    local[elems] = np.arange(m)
    table = local[sub]
    bad = np.argwhere(table == UNDEFINED)
    if len(bad):
        i, j = bad[0]
        raise NotAGroup("isotropy group not closed", (int(elems[i]), int(elems[j])))
    e = int(local[unit])
    bad = np.nonzero((table[e, :] != np.arange(m)) | (table[:, e] != np.arange(m)))[0]
    if len(bad):
        raise NotAGroup("unit law fails in isotropy group", (int(elems[bad[0]]),))
    inv = local[t.inv[elems]]
    ar = np.arange(m)
    bad = np.nonzero((inv == UNDEFINED) | (table[ar, np.maximum(inv, 0)] != e)
                     | (table[np.maximum(inv, 0), ar] != e))[0]
    if len(bad):
        raise NotAGroup("inverse law fails in isotropy group", (int(elems[bad[0]]),))
    for i in range(m):
        # (i j) k versus i (j k) for all j, k
        left = table[table[i, :], :]
        right = table[i, table]
        bad = np.argwhere(left != right)
        if len(bad):
            j, k = bad[0]
            raise NotAGroup("isotropy group not associative",
                            (int(elems[i]), int(elems[j]), int(elems[k])))
    table.flags.writeable = False
    grp = IsotropyGroup(u, tuple(int(x) for x in elems), unit, table)
    t.isotropy_cache[u] = grp
    return grp


def isotropy_conjugation(g: VectorGroupoid, x: int) -> dict[int, int]:
    """The map ``z -> x^-1 . z . x`` from G(source x) to G(target x).

    Verified to be a bijective homomorphism before it is returned.
    """
    t = g.tables
    if not 0 <= x < g.V.size:
        raise IndexOutOfRange(f"element {x} outside [0, {g.V.size})")
    u, v = int(t.alpha[x]), int(t.beta[x])
    dom = isotropy_group(g, u)
    cod = isotropy_group(g, v)
    P = t.product_ext
    zs = np.array(dom.elements, dtype=np.int64)
    xinv = int(t.inv[x])
    images = P[P[xinv, zs], x]
    cod_set = set(cod.elements)
    for z, w in zip(dom.elements, images.tolist()):
        if w == UNDEFINED or w not in cod_set:
            raise NotAnIsomorphism("conjugate leaves the target isotropy group", (x, z))
    if len(set(images.tolist())) != len(cod.elements):
        raise NotAnIsomorphism("conjugation is not a bijection", (x,))
    phi = dict(zip(dom.elements, images.tolist()))
    # phi(a b) == phi(a) phi(b)
    img_local = np.array([cod.local(w) for w in images.tolist()], dtype=np.int64)
    lhs = img_local[dom.table]
    rhs = cod.table[img_local[:, None], img_local[None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        i, j = bad[0]
        raise NotAnIsomorphism("conjugation is not a homomorphism",
                               (x, dom.elements[i], dom.elements[j]))
    return phi
