"""Property tests over randomly generated groupoids and maps."""
import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from builders import null, pair, single, sp
from oracles import composable_count, ehresmann_violations
from vecgroupoid.axioms import (
    check_all,
    check_derived_rules,
    check_ehresmann,
    check_vector_axioms,
    replay,
)
from vecgroupoid.constructions import canonical_projection, induced_groupoid, to_table, with_table
from vecgroupoid.enumspace import image_table
from vecgroupoid.errors import TableIncomplete
from vecgroupoid.groupoid import TableRule, VectorGroupoid, composable_pairs
from vecgroupoid.linalg import Matrix, left_inverse, mat_rank
from vecgroupoid.morphisms import GroupoidMorphism, check_morphism, is_transitive

SETTINGS = settings(max_examples=60, deadline=None)

PARENTS = [pair(1, 2), pair(1, 3), single(2, 2), null(1, 3), single(1, 5), null(2, 2)]


def matrix(draw, rows, cols, field):
    flat = draw(st.lists(st.integers(0, field.p - 1), min_size=rows * cols, max_size=rows * cols))
    return Matrix.from_rows([flat[i * cols:(i + 1) * cols] for i in range(rows)], field, cols=cols)


@st.composite
def induced_cases(draw):
    g = draw(st.sampled_from(PARENTS))
    xdim = draw(st.integers(0, 2))
    h = matrix(draw, g.V0.dim, xdim, g.field)
    ig = induced_groupoid(g, h, sp(xdim, g.field.p))
    assume(ig.structure.V.size <= 512)  # stay under the triple-enumeration cap
    return g, h, ig


@st.composite
def invertible(draw, n, field):
    m = matrix(draw, n, n, field)
    assume(mat_rank(m) == n)
    return m


@SETTINGS
@given(induced_cases())
def test_induced_groupoids_are_vector_groupoids(case):
    g, h, ig = case
    s = ig.structure
    assert ig.dim == 2 * ig.X.dim + g.V.dim - mat_rank(ig.constraint)
    assert check_all(s).passed
    assert check_morphism(canonical_projection(ig)).passed
    if is_transitive(g):
        assert is_transitive(s)


@SETTINGS
@given(induced_cases())
def test_composable_count_matches_fibre_formula(case):
    s = case[2].structure
    n = len(composable_pairs(s))
    assert n == int(s.tables.composable_count_by_base().sum())
    if s.V.size <= 27:
        assert n == composable_count(s.alpha.tolist(), s.beta.tolist(), s.V.dim, s.field.p)


@st.composite
def mutated_tables(draw):
    g = draw(st.sampled_from([pair(1, 2), null(1, 3), single(1, 3), single(2, 2)]))
    entries = dict(to_table(g).mult.entries)
    keys = sorted(entries)
    for _ in range(draw(st.integers(1, 3))):
        k = draw(st.sampled_from(keys))
        entries[k] = draw(st.integers(0, g.V.size - 1))
    return g, entries


@SETTINGS
@given(mutated_tables())
def test_witnesses_replay_and_theorems_hold(case):
    g, entries = case
    m = with_table(g, entries)
    eh, vec = check_ehresmann(m), check_vector_axioms(m)
    derived = check_derived_rules(m, eh.passed)
    for report in (eh, vec, derived):
        for r in report.failures:
            assert replay(m, r.law_id, r.witness)
    if eh.passed and vec.passed:
        assert derived.passed
    t = m.tables
    brute = ehresmann_violations(entries, t.alpha.tolist(), t.beta.tolist(), t.eps.tolist(),
                                 t.inv.tolist(), g.V.size, g.V0.size)
    assert eh.passed == (not brute)


@SETTINGS
@given(st.sampled_from(PARENTS), st.data())
def test_linear_transport(g, data):
    """Moving a groupoid along linear isomorphisms keeps every law, and the
    isomorphism itself is a morphism."""
    f = g.field
    T = data.draw(invertible(g.V.dim, f))
    T0 = data.draw(invertible(g.V0.dim, f))
    Ti, T0i = left_inverse(T), left_inverse(T0)
    fwd = image_table(T, g.V, g.V)
    back = np.empty_like(fwd)
    back[fwd] = np.arange(g.V.size)
    prod = g.tables.product
    entries = {}
    for x, y in composable_pairs(g):
        entries[(int(fwd[x]), int(fwd[y]))] = int(fwd[prod[x, y]])
    moved = VectorGroupoid(f, g.V, g.V0, T0 @ g.alpha @ Ti, T0 @ g.beta @ Ti,
                           T @ g.epsilon @ T0i, T @ g.inversion @ Ti, TableRule(entries))
    assert check_all(moved).passed
    assert check_morphism(GroupoidMorphism(g, moved, T, T0)).passed
    assert check_morphism(GroupoidMorphism(moved, g, Ti, T0i)).passed


@SETTINGS
@given(st.sampled_from(PARENTS), st.data())
def test_table_coverage_is_exact(g, data):
    entries = dict(to_table(g).mult.entries)
    drop = data.draw(st.sampled_from(sorted(entries)))
    del entries[drop]
    try:
        with_table(g, entries)
    except TableIncomplete as exc:
        assert exc.pair == drop
    else:
        raise AssertionError("incomplete table accepted")


@SETTINGS
@given(st.sampled_from(PARENTS), st.data())
def test_check_reports_are_deterministic(g, data):
    entries = dict(to_table(g).mult.entries)
    k = data.draw(st.sampled_from(sorted(entries)))
    entries[k] = data.draw(st.integers(0, g.V.size - 1))
    m = with_table(g, entries)
    assert check_all(m).to_dict() == check_all(m).to_dict()
