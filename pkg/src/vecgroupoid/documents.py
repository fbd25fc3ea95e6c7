"""JSON documents for groupoids, morphisms, factorization inputs and reports.

Groupoid document (key set is fixed)::

    {
      "field": {"p": 2},
      "base_dim": 1,
      "total_dim": 2,
      "alpha": [[1, 0]],
      "beta": [[0, 1]],
      "epsilon": [[1], [1]],
      "inversion": [[0, 1], [1, 0]],
      "multiplication": {"kind": "pair"}
    }

``multiplication.kind`` is one of ``null``, ``single_unit``, ``pair``,
``table`` (with ``"entries": [[x, y, xy], ...]``, element indices in
little-endian base p) or ``induced`` (with ``"parent"``: a groupoid
document, ``"h"``: a matrix, ``"pullback_basis"``: ambient vectors of
X + X + V).  Matrices are row-major lists of rows; a matrix with no rows is
``[]`` and its width comes from the declared dimensions.

Morphism document: ``{"source": G, "target": G, "f": M, "f0": M}``.
Factorization document: ``{"source": G, "parent": G, "u": M, "h": M}``; the
pullback of ``parent`` along ``h`` is rebuilt on load.
"""
from __future__ import annotations

import json
from typing import Any

from .constructions import InducedGroupoid, induced_groupoid
from .enumspace import SpaceRef
from .errors import BadCoordinate, MalformedDocument, ShapeMismatch
from .groupoid import InducedRule, NullRule, PairRule, SingleUnitRule, TableRule, VectorGroupoid
from .linalg import FieldSpec, Matrix
from .morphisms import GroupoidMorphism

GROUPOID_KEYS = ("field", "base_dim", "total_dim", "alpha", "beta", "epsilon",
                 "inversion", "multiplication")
MORPHISM_KEYS = ("source", "target", "f", "f0")
FACTORIZE_KEYS = ("source", "parent", "u", "h")
FORMULA_RULES = {"null": NullRule, "single_unit": SingleUnitRule, "pair": PairRule}


# -- low-level validation -----------------------------------------------------

def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None


def _expect_keys(doc: Any, keys: tuple[str, ...], what: str, optional: tuple[str, ...] = ()) -> None:
    if not isinstance(doc, dict):
        raise MalformedDocument(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in doc]
    extra = [k for k in doc if k not in keys and k not in optional]
    if missing:
        raise MalformedDocument(f"{what} is missing keys {missing}")
    if extra:
        raise MalformedDocument(f"{what} has unknown keys {extra}")


def _int(value: Any, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise MalformedDocument(f"{what} must be an integer, got {value!r}")
    return value


def _dim(value: Any, what: str) -> int:
    v = _int(value, what)
    if v < 0:
        raise MalformedDocument(f"{what} must be non-negative")
    return v


def matrix_from_json(value: Any, rows: int, cols: int, field: FieldSpec, what: str) -> Matrix:
    if not isinstance(value, list) or any(not isinstance(r, list) for r in value):
        raise MalformedDocument(f"{what} must be a list of rows")
    if len(value) != rows:
        raise ShapeMismatch(f"{what} has {len(value)} rows, expected {rows}")
    for r in value:
        if len(r) != cols:
            raise ShapeMismatch(f"{what} has a row of length {len(r)}, expected {cols}")
        for e in r:
            e = _int(e, f"entry of {what}")
            if not 0 <= e < field.p:
                raise BadCoordinate(f"entry {e} of {what} outside [0, {field.p})")
    return Matrix.from_rows(value, field, cols=cols)


# -- groupoids --------------------------------------------------------------

def groupoid_from_doc(doc: Any, what: str = "groupoid") -> VectorGroupoid:
    _expect_keys(doc, GROUPOID_KEYS, what)
    fdoc = doc["field"]
    _expect_keys(fdoc, ("p",), f"{what}.field")
    field = FieldSpec(_int(fdoc["p"], f"{what}.field.p"))
    n0 = _dim(doc["base_dim"], f"{what}.base_dim")
    n = _dim(doc["total_dim"], f"{what}.total_dim")
    V, V0 = SpaceRef(n, field), SpaceRef(n0, field)
    alpha = matrix_from_json(doc["alpha"], n0, n, field, f"{what}.alpha")
    beta = matrix_from_json(doc["beta"], n0, n, field, f"{what}.beta")
    eps = matrix_from_json(doc["epsilon"], n, n0, field, f"{what}.epsilon")
    inv = matrix_from_json(doc["inversion"], n, n, field, f"{what}.inversion")

    mdoc = doc["multiplication"]
    if not isinstance(mdoc, dict) or "kind" not in mdoc:
        raise MalformedDocument(f"{what}.multiplication must be an object with a 'kind'")
    kind = mdoc["kind"]
    if kind in FORMULA_RULES:
        _expect_keys(mdoc, ("kind",), f"{what}.multiplication")
        return VectorGroupoid(field, V, V0, alpha, beta, eps, inv, FORMULA_RULES[kind]())
    if kind == "table":
        _expect_keys(mdoc, ("kind", "entries"), f"{what}.multiplication")
        entries: dict[tuple[int, int], int] = {}
        if not isinstance(mdoc["entries"], list):
            raise MalformedDocument(f"{what}.multiplication.entries must be a list")
        for item in mdoc["entries"]:
            if not isinstance(item, list) or len(item) != 3:
                raise MalformedDocument(f"table entry {item!r} is not [x, y, xy]")
            x, y, xy = (_int(e, "table entry") for e in item)
            if (x, y) in entries:
                raise MalformedDocument(f"duplicate table entry for pair {(x, y)}")
            entries[(x, y)] = xy
        return VectorGroupoid(field, V, V0, alpha, beta, eps, inv, TableRule(entries))
    if kind == "induced":
        _expect_keys(mdoc, ("kind", "parent", "h", "pullback_basis"), f"{what}.multiplication")
        ig = induced_from_doc(mdoc, n0, field, what)
        s = ig.structure
        if s.V.dim != n:
            raise ShapeMismatch(f"{what}: pullback has dimension {s.V.dim}, document says {n}")
        for name, m in (("alpha", alpha), ("beta", beta), ("epsilon", eps), ("inversion", inv)):
            if getattr(s, name) != m:
                raise MalformedDocument(f"{what}.{name} disagrees with the induced construction")
        return s
    raise MalformedDocument(f"unknown multiplication kind {kind!r}")


def induced_from_doc(mdoc: dict, x_dim: int, field: FieldSpec, what: str) -> InducedGroupoid:
    parent = groupoid_from_doc(mdoc["parent"], f"{what}.parent")
    if parent.field != field:
        raise ShapeMismatch(f"{what}: parent is over GF({parent.field.p})")
    h = matrix_from_json(mdoc["h"], parent.V0.dim, x_dim, field, f"{what}.h")
    amb = 2 * x_dim + parent.V.dim
    basis = mdoc["pullback_basis"]
    if not isinstance(basis, list):
        raise MalformedDocument(f"{what}.pullback_basis must be a list of vectors")
    for b in basis:
        if not isinstance(b, list) or len(b) != amb:
            raise ShapeMismatch(f"pullback basis vectors must have length {amb}")
        for e in b:
            e = _int(e, "pullback basis entry")
            if not 0 <= e < field.p:
                raise BadCoordinate(f"pullback basis entry {e} outside [0, {field.p})")
    return induced_groupoid(parent, h, SpaceRef(x_dim, field), basis)


def groupoid_to_doc(g: VectorGroupoid) -> dict:
    doc = {
        "field": {"p": g.field.p},
        "base_dim": g.V0.dim,
        "total_dim": g.V.dim,
        "alpha": g.alpha.tolist(),
        "beta": g.beta.tolist(),
        "epsilon": g.epsilon.tolist(),
        "inversion": g.inversion.tolist(),
    }
    rule = g.mult
    if isinstance(rule, TableRule):
        entries = sorted(rule.entries.items())
        doc["multiplication"] = {"kind": "table", "entries": [[x, y, xy] for (x, y), xy in entries]}
    elif isinstance(rule, InducedRule):
        doc["multiplication"] = {
            "kind": "induced",
            "parent": groupoid_to_doc(rule.parent),
            "h": rule.h.tolist(),
            "pullback_basis": [list(rule.basis.column(j)) for j in range(rule.basis.cols)],
        }
    else:
        doc["multiplication"] = {"kind": rule.kind}
    return doc


def parse_spec(text: str) -> VectorGroupoid:
    return groupoid_from_doc(load_json(text))


def serialize(g: VectorGroupoid) -> str:
    return dumps(groupoid_to_doc(g))


# -- morphisms and factorization inputs -------------------------------------

def morphism_from_doc(doc: Any) -> GroupoidMorphism:
    _expect_keys(doc, MORPHISM_KEYS, "morphism")
    s = groupoid_from_doc(doc["source"], "source")
    t = groupoid_from_doc(doc["target"], "target")
    f = matrix_from_json(doc["f"], t.V.dim, s.V.dim, s.field, "f")
    f0 = matrix_from_json(doc["f0"], t.V0.dim, s.V0.dim, s.field, "f0")
    return GroupoidMorphism(s, t, f, f0)


def morphism_to_doc(m: GroupoidMorphism) -> dict:
    return {"source": groupoid_to_doc(m.source), "target": groupoid_to_doc(m.target),
            "f": m.f.tolist(), "f0": m.f0.tolist()}


def factorization_from_doc(doc: Any) -> tuple[VectorGroupoid, Matrix, Matrix, InducedGroupoid]:
    _expect_keys(doc, FACTORIZE_KEYS, "factorization input")
    vp = groupoid_from_doc(doc["source"], "source")
    parent = groupoid_from_doc(doc["parent"], "parent")
    if vp.field != parent.field:
        raise ShapeMismatch("source and parent are over different fields")
    u = matrix_from_json(doc["u"], parent.V.dim, vp.V.dim, vp.field, "u")
    h = matrix_from_json(doc["h"], parent.V0.dim, vp.V0.dim, vp.field, "h")
    return vp, u, h, induced_groupoid(parent, h, vp.V0)


def factorization_to_doc(vp: VectorGroupoid, parent: VectorGroupoid, u: Matrix, h: Matrix) -> dict:
    return {"source": groupoid_to_doc(vp), "parent": groupoid_to_doc(parent),
            "u": u.tolist(), "h": h.tolist()}


# -- output -----------------------------------------------------------------

def _is_flat(value: Any) -> bool:
    """Scalars, lists of scalars and lists of lists of scalars stay on one line."""
    if isinstance(value, list):
        return all(not isinstance(v, (list, dict)) or (isinstance(v, list) and
                   all(not isinstance(e, (list, dict)) for e in v)) for v in value)
    return not isinstance(value, dict)


def _is_scalar_or_row(value: Any) -> bool:
    if isinstance(value, list):
        return all(not isinstance(e, (list, dict)) for e in value)
    return not isinstance(value, dict)


def dumps(doc: Any, indent: int = 0) -> str:
    """Deterministic JSON: objects one key per line, matrices and tables compact."""
    pad = "  " * indent
    if isinstance(doc, dict):
        if not doc:
            return "{}"
        if all(_is_scalar_or_row(v) for v in doc.values()):
            return json.dumps(doc, separators=(", ", ": "))
        items = [f'{pad}  {json.dumps(k)}: {dumps(v, indent + 1)}' for k, v in doc.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(doc, list) and not _is_flat(doc):
        items = [f"{pad}  {dumps(v, indent + 1)}" for v in doc]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(doc, separators=(", ", ": "))
