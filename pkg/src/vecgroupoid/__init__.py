"""Finite-field vector groupoids: construction, law checking, morphisms."""
from .axioms import (
    CheckReport,
    CheckResult,
    check_all,
    check_derived_rules,
    check_ehresmann,
    check_subspaces,
    check_vector_axioms,
    replay,
)
from .constructions import (
    InducedGroupoid,
    anchor_morphism,
    canonical_projection,
    induced_groupoid,
    null_groupoid,
    pair_groupoid,
    single_unit_groupoid,
    to_table,
)
from .documents import parse_spec, serialize
from .enumspace import SpaceRef, index_to_vector, vector_to_index
from .errors import (
    AmbientEscape,
    BadCoordinate,
    CapExceeded,
    EncodingFailure,
    FactorizationError,
    IndexOutOfRange,
    MalformedDocument,
    NoSolution,
    NotAGroup,
    NotAMorphism,
    NotAnIsomorphism,
    NotComposable,
    NotPrime,
    ShapeMismatch,
    TableExtraneous,
    TableIncomplete,
    VGError,
    ZeroInverse,
)
from .groupoid import (
    UNDEFINED,
    VectorGroupoid,
    apply_structure,
    compose,
    composable_pairs,
    isotropy_conjugation,
    isotropy_group,
)
from .linalg import FieldSpec, Matrix, kernel_basis, mat_rank, solve_linear
from .morphisms import (
    GroupoidMorphism,
    check_morphism,
    factorize,
    identity_morphism,
    is_transitive,
    universal_factorization,
)

__all__ = [
    "AmbientEscape",
    "anchor_morphism",
    "apply_structure",
    "BadCoordinate",
    "canonical_projection",
    "CapExceeded",
    "check_all",
    "check_derived_rules",
    "check_ehresmann",
    "check_morphism",
    "check_subspaces",
    "check_vector_axioms",
    "CheckReport",
    "CheckResult",
    "composable_pairs",
    "compose",
    "EncodingFailure",
    "FactorizationError",
    "factorize",
    "FieldSpec",
    "GroupoidMorphism",
    "identity_morphism",
    "index_to_vector",
    "IndexOutOfRange",
    "induced_groupoid",
    "InducedGroupoid",
    "is_transitive",
    "isotropy_conjugation",
    "isotropy_group",
    "kernel_basis",
    "MalformedDocument",
    "mat_rank",
    "Matrix",
    "NoSolution",
    "NotAGroup",
    "NotAMorphism",
    "NotAnIsomorphism",
    "NotComposable",
    "NotPrime",
    "null_groupoid",
    "pair_groupoid",
    "parse_spec",
    "replay",
    "serialize",
    "ShapeMismatch",
    "single_unit_groupoid",
    "solve_linear",
    "SpaceRef",
    "TableExtraneous",
    "TableIncomplete",
    "to_table",
    "UNDEFINED",
    "universal_factorization",
    "vector_to_index",
    "VectorGroupoid",
    "VGError",
    "ZeroInverse",
]

__version__ = "0.1.0"
