import pytest

from builders import null, pair, single
from oracles import FROZEN, index_of, kernel_by_enumeration
from vecgroupoid.axioms import (
    FAIL,
    PASS,
    REPLAYS,
    CheckReport,
    CheckResult,
    check_all,
    check_derived_rules,
    check_ehresmann,
    check_subspaces,
    check_vector_axioms,
    replay,
)
from vecgroupoid.constructions import with_table
from vecgroupoid.documents import dumps
from vecgroupoid.groupoid import TableRule, VectorGroupoid, compose
from vecgroupoid.linalg import FieldSpec, Matrix

EHRESMANN = ["alpha-surjective", "beta-surjective", "eps-injective", "G1", "G2", "G3"]
VECTOR = ["3.1.2-structural", "3.1.3.1", "3.1.4.1", "3.1.4.2", "3.1.4.3", "3.1.4.4"]


def mutated_pair(pair_key, value):
    entries = dict(FROZEN["pair_gf2_1_table"])
    entries[pair_key] = value
    return with_table(pair(), entries)


def bad_inversion_gf3():
    g = single(1, 3)
    f = g.field
    return VectorGroupoid(f, g.V, g.V0, g.alpha, g.beta, g.epsilon, Matrix.identity(1, f), g.mult)


def assert_witnesses_replay(report, g):
    for r in report.failures:
        assert r.witness is not None
        assert replay(g, r.law_id, r.witness), r


class TestEhresmann:
    @pytest.mark.parametrize("g", [pair(), null()], ids=["pair", "null"])
    def test_constructions_pass(self, g):
        r = check_ehresmann(g)
        assert r.passed
        assert r.law_ids == EHRESMANN

    def test_mutated_product_fails_with_witness(self):
        g = mutated_pair((1, 2), 0)
        r = check_ehresmann(g)
        failed = {f.law_id for f in r.failures}
        assert failed & {"G1", "G2"}
        assert_witnesses_replay(r, g)
        assert r["G1"].witness == (0, 1, 2)

    def test_every_law_reported_after_failure(self):
        r = check_ehresmann(mutated_pair((1, 2), 0))
        assert r.law_ids == EHRESMANN

    def test_non_surjective_source(self):
        f = FieldSpec(2)
        g = null()
        zero = Matrix.zeros(1, 1, f)
        broken = VectorGroupoid(f, g.V, g.V0, zero, zero, g.epsilon, g.inversion,
                                TableRule({(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}))
        r = check_ehresmann(broken)
        assert r["alpha-surjective"].status == FAIL
        assert r["alpha-surjective"].witness == (1,)
        assert_witnesses_replay(r, broken)


class TestVectorAxioms:
    @pytest.mark.parametrize("g", [pair(), null(2)], ids=["pair", "null2"])
    def test_constructions_pass(self, g):
        r = check_vector_axioms(g)
        assert r.passed
        assert r.law_ids == VECTOR
        assert r["3.1.2-structural"].tuples_checked == 0

    def test_inversion_identity_over_gf2_still_passes(self):
        g = single(2, 2)
        assert g.inversion == Matrix.identity(2, g.field)
        assert check_vector_axioms(g).passed

    def test_inversion_identity_over_gf3_fails(self):
        g = bad_inversion_gf3()
        r = check_vector_axioms(g)
        assert [f.law_id for f in r.failures] == ["3.1.3.1"]
        assert r["3.1.3.1"].witness == (1,)
        assert_witnesses_replay(r, g)


class TestDerived:
    def test_pair_all_pass(self):
        g = pair()
        r = check_derived_rules(g)
        assert r.passed
        assert g.alpha @ g.inversion == g.beta

    def test_single_unit_left_absorption(self):
        g = single()
        for x in range(g.V.size):
            assert compose(g, 0, x) == x
        assert check_derived_rules(g)["eps0-absorb-left"].status == PASS

    def test_advisory_when_groupoid_laws_fail(self):
        g = bad_inversion_gf3()
        r = check_all(g)
        derived = [x for x in r.results if x.law_id.startswith("P2.") or x.law_id.startswith("eps0")]
        assert all(x.advisory for x in derived)
        assert any(x.status == FAIL for x in derived)
        assert_witnesses_replay(r, g)
        assert not any(x.advisory for x in check_all(pair()).results)


class TestSubspaces:
    def test_pair_kernels(self):
        g = pair()
        assert kernel_by_enumeration(g.alpha.tolist(), 2, 2) == {(0, 0), (0, 1)}
        assert kernel_by_enumeration(g.beta.tolist(), 2, 2) == {(0, 0), (1, 0)}
        assert check_subspaces(g).passed

    def test_null_trivial_kernels(self):
        g = null(2)
        assert kernel_by_enumeration(g.alpha.tolist(), 2, 2) == {(0, 0)}
        assert check_subspaces(g).passed

    def test_single_unit_inversion_automorphism(self):
        g = single(1, 3)
        assert g.inversion.tolist() == [[2]]
        assert check_subspaces(g)["inversion-automorphism"].status == PASS

    def test_isotropy_at_zero_spans_a_subspace(self):
        g = pair(1, 3)
        r = check_subspaces(g)
        assert r["isotropy0-span"].status == PASS
        assert index_of((0, 0), 3) == 0


class TestReports:
    def test_duplicate_ids_rejected(self):
        with pytest.raises(ValueError):
            CheckReport([CheckResult("x", PASS, 0), CheckResult("x", PASS, 0)])

    def test_determinism(self):
        g = mutated_pair((3, 3), 1)
        a = dumps(check_all(g).to_dict())
        b = dumps(check_all(g).to_dict())
        assert a == b

    def test_summary(self):
        d = check_all(mutated_pair((1, 2), 0)).to_dict()
        s = d["summary"]
        assert s["pass_count"] + s["fail_count"] == len(d["results"])
        assert s["elapsed_ms"] is None

    def test_every_law_has_a_replay(self):
        ids = check_all(pair()).law_ids
        structural = {"3.1.2-structural"}
        assert set(ids) - structural <= set(REPLAYS)

    def test_replay_rejects_non_witnesses(self):
        g = pair()
        for law in ("G1", "G2", "G3", "3.1.3.1"):
            width = 3 if law == "G1" else 1
            assert not replay(g, law, (0,) * width)
