"""Concrete vector groupoids: null, single-unit, pair and induced (pullback).

Also the anchor morphism of any groupoid into the pair groupoid of its base,
and the canonical projection of an induced groupoid onto its parent.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .enumspace import SpaceRef, index_to_vector, vector_to_index
from .errors import AmbientEscape, NoSolution, NotAMorphism, ShapeMismatch
from .groupoid import (
    InducedRule,
    NullRule,
    PairRule,
    SingleUnitRule,
    TableRule,
    VectorGroupoid,
)
from .linalg import (
    Matrix,
    Vector,
    block,
    columns_matrix,
    kernel_basis,
    left_inverse,
    mat_rank,
    solve_linear,
    vstack,
)
from .morphisms import GroupoidMorphism, check_morphism


def null_groupoid(V: SpaceRef) -> VectorGroupoid:
    """V over itself with every structure map the identity and ``x . x = x``."""
    ident = Matrix.identity(V.dim, V.field)
    return VectorGroupoid(V.field, V, V, ident, ident, ident, ident, NullRule())


def single_unit_groupoid(V: SpaceRef) -> VectorGroupoid:
    """V over the zero space; the product is addition and the inverse is negation."""
    f = V.field
    base = SpaceRef(0, f)
    zero_out = Matrix.zeros(0, V.dim, f)
    return VectorGroupoid(f, V, base, zero_out, zero_out, Matrix.zeros(V.dim, 0, f),
                          -Matrix.identity(V.dim, f), SingleUnitRule())


def pair_groupoid(X: SpaceRef) -> VectorGroupoid:
    """X + X over X with ``(x, y) . (y, z) = (x, z)``."""
    f, n = X.field, X.dim
    V = SpaceRef(2 * n, f)
    eye, zero = Matrix.identity(n, f), Matrix.zeros(n, n, f)
    return VectorGroupoid(
        f, V, X,
        alpha=block([[eye, zero]]),
        beta=block([[zero, eye]]),
        epsilon=vstack([eye, eye]),
        inversion=block([[zero, eye], [eye, zero]]),
        mult=PairRule(),
    )


def to_table(g: VectorGroupoid) -> VectorGroupoid:
    """Same groupoid with its multiplication materialised as a table."""
    t = g.tables
    prod = t.product
    entries = {(x, y): int(prod[x, y]) for x, y in g.iter_composable_pairs()}
    return VectorGroupoid(g.field, g.V, g.V0, g.alpha, g.beta, g.epsilon, g.inversion,
                          TableRule(entries))


def with_table(g: VectorGroupoid, entries: dict[tuple[int, int], int]) -> VectorGroupoid:
    return VectorGroupoid(g.field, g.V, g.V0, g.alpha, g.beta, g.epsilon, g.inversion,
                          TableRule(entries))


@dataclass(frozen=True)
class InducedGroupoid:
    """The pullback h*(V) of a groupoid along ``h: X -> V0``.

    ``structure`` is a vector groupoid over X whose elements are coordinate
    vectors with respect to ``pullback_basis``; each basis vector is an
    ambient triple ``(x, y, a)`` of X + X + V, flattened.
    """

    parent: VectorGroupoid
    h: Matrix
    X: SpaceRef
    pullback_basis: tuple[Vector, ...]
    constraint: Matrix
    basis_matrix: Matrix
    structure: VectorGroupoid

    @property
    def dim(self) -> int:
        return len(self.pullback_basis)

    @property
    def ambient_dim(self) -> int:
        return 2 * self.X.dim + self.parent.V.dim

    @property
    def projection_matrix(self) -> Matrix:
        """Matrix of ``(x, y, a) -> a`` in pullback coordinates."""
        f, n, dv = self.X.field, self.X.dim, self.parent.V.dim
        third = block([[Matrix.zeros(dv, 2 * n, f), Matrix.identity(dv, f)]])
        return third @ self.basis_matrix

    def to_ambient(self, idx: int) -> tuple[Vector, Vector, Vector]:
        return self.structure.mult.to_ambient(self.structure, idx)

    def from_ambient(self, x: Sequence[int], y: Sequence[int], a: Sequence[int]) -> int:
        return self.structure.mult.from_ambient(self.structure, x, y, a)


def constraint_matrix(g: VectorGroupoid, h: Matrix) -> Matrix:
    """``[h, 0, -alpha; 0, h, -beta]``: its kernel is the pullback."""
    f = g.field
    z = Matrix.zeros(h.rows, h.cols, f)
    return block([[h, z, -g.alpha], [z, h, -g.beta]])


def induced_groupoid(
    g: VectorGroupoid,
    h: Matrix,
    X: SpaceRef,
    basis: Sequence[Sequence[int]] | None = None,
) -> InducedGroupoid:
    """Pull ``g`` back along ``h: X -> V0``.

    ``basis`` may supply a pullback basis (e.g. read from a file); it must
    be a basis of the kernel of the constraint matrix.  By default the basis
    from :func:`kernel_basis` is used.
    """
    f = g.field
    if h.field != f or h.shape != (g.V0.dim, X.dim) or X.field != f:
        raise ShapeMismatch(
            f"h must be a {g.V0.dim}x{X.dim} matrix over GF({f.p}), got {h.rows}x{h.cols}"
        )
    C = constraint_matrix(g, h)
    amb = C.cols
    kernel_dim = amb - mat_rank(C)
    if basis is None:
        basis = kernel_basis(C)
    basis = tuple(tuple(int(e) for e in b) for b in basis)
    for b in basis:
        if len(b) != amb:
            raise ShapeMismatch(f"pullback basis vector of length {len(b)}, expected {amb}")
        if any(C.apply(b)):
            raise AmbientEscape(f"basis vector {b} is not in the pullback")
    B = columns_matrix(basis, f, amb)
    if len(basis) != kernel_dim or mat_rank(B) != kernel_dim:
        raise ShapeMismatch(f"pullback basis must have {kernel_dim} independent vectors")
    n, dv = X.dim, g.V.dim
    k = len(basis)
    V = SpaceRef(k, f)
    eye_n = Matrix.identity(n, f)
    zn, znv = Matrix.zeros(n, n, f), Matrix.zeros(n, dv, f)
    alpha_s = block([[eye_n, zn, znv]]) @ B
    beta_s = block([[zn, eye_n, znv]]) @ B

    def encode(w):
        try:
            return solve_linear(B, w)
        except NoSolution:
            raise AmbientEscape(f"ambient vector {tuple(w)} escapes the pullback") from None

    units_amb = vstack([eye_n, eye_n, g.epsilon @ h])
    eps_s = columns_matrix([encode(units_amb.column(j)) for j in range(n)], f, k)
    swap = block([
        [zn, eye_n, znv],
        [eye_n, zn, znv],
        [Matrix.zeros(dv, n, f), Matrix.zeros(dv, n, f), g.inversion],
    ])
    swapped = swap @ B
    inv_s = columns_matrix([encode(swapped.column(j)) for j in range(k)], f, k)
    rule = InducedRule(parent=g, h=h, basis=B, left=left_inverse(B))
    structure = VectorGroupoid(f, V, X, alpha_s, beta_s, eps_s, inv_s, rule)
    return InducedGroupoid(g, h, X, basis, C, B, structure)


def anchor_matrix(g: VectorGroupoid) -> Matrix:
    return vstack([g.alpha, g.beta])


def raw_anchor_morphism(g: VectorGroupoid) -> GroupoidMorphism:
    return GroupoidMorphism(g, pair_groupoid(g.V0), anchor_matrix(g),
                            Matrix.identity(g.V0.dim, g.field))


def _checked(m: GroupoidMorphism, what: str) -> GroupoidMorphism:
    report = check_morphism(m)
    if not report.passed:
        bad = report.failures[0]
        raise NotAMorphism(f"{what} fails {bad.law_id}", bad.witness or (), report)
    return m


def anchor_morphism(g: VectorGroupoid) -> GroupoidMorphism:
    """``x -> (source x, target x)`` into the pair groupoid of the base."""
    return _checked(raw_anchor_morphism(g), "anchor map")


def raw_canonical_projection(ig: InducedGroupoid) -> GroupoidMorphism:
    return GroupoidMorphism(ig.structure, ig.parent, ig.projection_matrix, ig.h)


def canonical_projection(ig: InducedGroupoid) -> GroupoidMorphism:
    """``(x, y, a) -> a`` together with ``h`` on the bases."""
    return _checked(raw_canonical_projection(ig), "canonical projection")


def element(g: VectorGroupoid, *coords: int) -> int:
    """Index of the element of V with the given coordinates."""
    return vector_to_index(coords, g.V)


def coords(g: VectorGroupoid, idx: int) -> Vector:
    return index_to_vector(idx, g.V)
