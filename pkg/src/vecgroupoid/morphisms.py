"""Groupoid morphisms, the universal factorization through a pullback, transitivity."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from . import enumspace as es
from .axioms import (
    FAIL,
    PASS,
    CheckReport,
    CheckResult,
    _fibre_grid,
    first_violation,
    matrix_identity_witness,
)
from .enumspace import index_to_vector, vector_to_index
from .errors import (
    AmbientEscape,
    EncodingFailure,
    FactorizationError,
    NoSolution,
    NotAGroup,
    NotAMorphism,
    NotAnIsomorphism,
    NotComposable,
    ShapeMismatch,
)
from .groupoid import UNDEFINED, VectorGroupoid, apply_structure, compose, isotropy_conjugation
from .linalg import Matrix, mat_rank, solve_linear, vstack

if TYPE_CHECKING:
    from .constructions import InducedGroupoid


@dataclass(frozen=True)
class GroupoidMorphism:
    """A pair (f, f0) of linear maps between total spaces and between bases."""

    source: VectorGroupoid
    target: VectorGroupoid
    f: Matrix
    f0: Matrix

    def __post_init__(self):
        s, t = self.source, self.target
        if s.field != t.field or self.f.field != s.field or self.f0.field != s.field:
            raise ShapeMismatch("morphism mixes fields")
        if self.f.shape != (t.V.dim, s.V.dim):
            raise ShapeMismatch(f"f is {self.f.rows}x{self.f.cols}, expected {t.V.dim}x{s.V.dim}")
        if self.f0.shape != (t.V0.dim, s.V0.dim):
            raise ShapeMismatch(f"f0 is {self.f0.rows}x{self.f0.cols}, expected {t.V0.dim}x{s.V0.dim}")

    def __call__(self, x: int) -> int:
        return vector_to_index(self.f.apply(index_to_vector(x, self.source.V)), self.target.V)

    def on_base(self, u: int) -> int:
        return vector_to_index(self.f0.apply(index_to_vector(u, self.source.V0)), self.target.V0)


def _morphism_replay(m: GroupoidMorphism, law: str, w: tuple[int, ...]) -> bool:
    s, t = m.source, m.target
    if law == "M.alpha":
        return apply_structure(t, "source", m(w[0])) != m.on_base(apply_structure(s, "source", w[0]))
    if law == "M.beta":
        return apply_structure(t, "target", m(w[0])) != m.on_base(apply_structure(s, "target", w[0]))
    if law == "M.mult":
        x, y = w
        xy = compose(s, x, y)
        try:
            return compose(t, m(x), m(y)) != m(xy)
        except NotComposable:
            return True
    if law == "M.eps":
        return m(apply_structure(s, "unit", w[0])) != apply_structure(t, "unit", m.on_base(w[0]))
    if law == "M.inv":
        return m(apply_structure(s, "invert", w[0])) != apply_structure(t, "invert", m(w[0]))
    raise KeyError(law)


def _mres(m, law, checked, witness) -> CheckResult:
    if witness is None:
        return CheckResult(law, PASS, int(checked))
    if not _morphism_replay(m, law, witness):
        raise AssertionError(f"witness {witness} for {law} does not replay")
    return CheckResult(law, FAIL, int(checked), witness)


def check_morphism(m: GroupoidMorphism) -> CheckReport:
    """Compatibility with source/target, multiplicativity, units and inverses.

    The unit and inverse identities follow from the first three; they are
    checked independently as a consistency oracle.
    """
    s, t = m.source, m.target
    s.V.require_pairs()
    p = s.field.p
    results = [
        _mres(m, "M.alpha", s.V.dim,
              matrix_identity_witness(t.alpha @ m.f, m.f0 @ s.alpha, p)),
        _mres(m, "M.beta", s.V.dim,
              matrix_identity_witness(t.beta @ m.f, m.f0 @ s.beta, p)),
    ]
    ts, tt = s.tables, t.tables
    fx = es.image_table(m.f, s.V, t.V)
    x, y = _fibre_grid(ts.beta_fibres, ts.alpha_fibres)
    xy = ts.product_ext[x, y]
    lhs = fx[xy]
    rhs = tt.product_ext[fx[x], fx[y]]
    bad = (rhs == UNDEFINED) | (lhs != rhs)
    results.append(_mres(m, "M.mult", len(x), first_violation(bad, x, y)))
    results.append(_mres(m, "M.eps", s.V0.dim,
                         matrix_identity_witness(m.f @ s.epsilon, t.epsilon @ m.f0, p)))
    results.append(_mres(m, "M.inv", s.V.dim,
                         matrix_identity_witness(m.f @ s.inversion, t.inversion @ m.f, p)))
    results.append(CheckResult("M.linear-structural", PASS, 0))
    return CheckReport(results)


def identity_morphism(g: VectorGroupoid) -> GroupoidMorphism:
    return GroupoidMorphism(g, g, Matrix.identity(g.V.dim, g.field), Matrix.identity(g.V0.dim, g.field))


# -- universal property ------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    morphism: GroupoidMorphism
    report: CheckReport


def _matrix_law(law, lhs: Matrix, rhs: Matrix, p: int) -> CheckResult:
    w = matrix_identity_witness(lhs, rhs, p)
    return CheckResult(law, PASS if w is None else FAIL, lhs.cols, w)


def factorize(vp: VectorGroupoid, u: Matrix, h: Matrix, ig: "InducedGroupoid") -> Factorization:
    """Factor ``(u, h): vp -> ig.parent`` through the pullback ``ig``.

    The factor sends ``a`` to ``(source a, target a, u a)``.  The report
    covers commutation, the morphism laws of the factor, and uniqueness:
    the map ``c -> (source c, target c, projection c)`` on the pullback is
    checked injective by enumeration, so the three constraints pin down the
    factor at every element.
    """
    if h != ig.h or vp.V0 != ig.X:
        raise ShapeMismatch("the pullback was not built from this h over the base of vp")
    given = GroupoidMorphism(vp, ig.parent, u, h)
    rep = check_morphism(given)
    if not rep.passed:
        bad = rep.failures[0]
        raise NotAMorphism(f"(u, h) fails {bad.law_id}", bad.witness or (), rep)

    target = ig.structure
    B = ig.basis_matrix
    f, p = vp.field, vp.field.p
    formula = vstack([vp.alpha, vp.beta, u])  # a -> (source a, target a, u a), ambient
    cols = []
    for j in range(vp.V.dim):
        try:
            cols.append(solve_linear(B, formula.column(j)))
        except NoSolution:
            raise EncodingFailure(f"image of basis vector {j} escapes the pullback") from None
    v = Matrix.from_columns(cols, f, target.V.dim)
    vm = GroupoidMorphism(vp, target, v, Matrix.identity(ig.X.dim, f))

    results = []
    # pointwise: the formula, encoded element by element, agrees with the matrix
    witness = None
    for a in range(vp.V.size):
        vec = index_to_vector(a, vp.V)
        amb = formula.apply(vec)
        try:
            enc = ig.from_ambient(amb[:ig.X.dim], amb[ig.X.dim:2 * ig.X.dim], amb[2 * ig.X.dim:])
        except AmbientEscape:
            enc = None
        if enc != vm(a):
            witness = (a,)
            break
    results.append(CheckResult("UP.pointwise", PASS if witness is None else FAIL, vp.V.size, witness))
    results.append(_matrix_law("UP.alpha", target.alpha @ v, vp.alpha, p))
    results.append(_matrix_law("UP.beta", target.beta @ v, vp.beta, p))
    results.append(_matrix_law("UP.commute", ig.projection_matrix @ v, u, p))

    # uniqueness: signatures of pullback elements are pairwise distinct, and
    # each element of vp has exactly one candidate image
    sig_matrix = vstack([target.alpha, target.beta, ig.projection_matrix])
    sigs = es.digits(target.V.elements(), target.V) @ sig_matrix.array.T % p
    _, first, counts = np.unique(sigs, axis=0, return_index=True, return_counts=True)
    witness = None
    if np.any(counts > 1):
        row = sigs[first[np.nonzero(counts > 1)[0][0]]]
        clash = np.nonzero((sigs == row).all(axis=1))[0]
        witness = (int(clash[0]), int(clash[1]))
    else:
        lookup = {tuple(r): c for c, r in enumerate(sigs.tolist())}
        want = es.digits(vp.V.elements(), vp.V) @ formula.array.T % p
        for a, s in enumerate(want.tolist()):
            if lookup.get(tuple(s)) != vm(a):
                witness = (a,)
                break
    results.append(CheckResult("UP.unique", PASS if witness is None else FAIL,
                               target.V.size + vp.V.size, witness))
    report = CheckReport(results).merged(check_morphism(vm), prefix="UP.morphism:")
    return Factorization(vm, report)


def universal_factorization(vp: VectorGroupoid, u: Matrix, h: Matrix,
                            ig: "InducedGroupoid") -> GroupoidMorphism:
    """The unique base-preserving morphism ``v`` with ``projection . v == u``."""
    fac = factorize(vp, u, h, ig)
    if not fac.report.passed:
        raise FactorizationError(f"factorization fails {fac.report.failures[0].law_id}", fac.report)
    return fac.morphism


# -- transitivity ------------------------------------------------------------

@dataclass(frozen=True)
class Transitivity:
    """Outcome of :func:`is_transitive`.

    ``missing`` is the least base pair outside the anchor image when the
    groupoid is not transitive.  ``conjugations`` maps each base pair
    ``(u, v)`` to the least arrow ``x`` from u to v and the isotropy
    isomorphism it induces; populated only for transitive groupoids.
    """

    transitive: bool
    by_rank: bool
    by_enumeration: bool
    missing: tuple[int, int] | None = None
    conjugations: dict[tuple[int, int], tuple[int, dict[int, int]]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.transitive


def is_transitive(g: VectorGroupoid, verify_isotropy: bool = True) -> Transitivity:
    n0 = g.V0.size
    by_rank = mat_rank(vstack([g.alpha, g.beta])) == 2 * g.V0.dim
    t = g.tables
    hit = np.zeros(n0 * n0, dtype=bool)
    hit[t.alpha * n0 + t.beta] = True
    by_enum = bool(hit.all())
    missing = None
    if not by_enum:
        k = int(np.nonzero(~hit)[0][0])
        missing = divmod(k, n0)
    conj = {}
    if by_rank and by_enum and verify_isotropy:
        keys, first = np.unique(t.alpha * n0 + t.beta, return_index=True)
        for k, x in zip(keys.tolist(), first.tolist()):
            conj[divmod(k, n0)] = (x, isotropy_conjugation(g, x))
    return Transitivity(by_rank and by_enum, by_rank, by_enum, missing, conj)


def transitivity_report(g: VectorGroupoid) -> CheckReport:
    """Laws for reports: rank/enumeration agreement, and isotropy isomorphism
    across the base when transitive (vacuous otherwise)."""
    try:
        tr = is_transitive(g)
        wit = None
        checked = len(tr.conjugations)
    except (NotAGroup, NotAnIsomorphism) as exc:
        tr = is_transitive(g, verify_isotropy=False)
        wit = exc.witness
        checked = 0
    agree = tr.by_rank == tr.by_enumeration
    results = [
        CheckResult("anchor-rank-agrees", PASS if agree else FAIL, g.V.size,
                    None if agree else (tr.missing or (0, 0))),
        CheckResult("P2.1.viii", PASS if wit is None else FAIL, checked, wit),
    ]
    return CheckReport(results)
