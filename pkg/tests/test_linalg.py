from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import kernel_by_enumeration, mat_vec, rank_by_span, span_by_enumeration
from vecgroupoid.errors import BadCoordinate, NoSolution, NotPrime, ShapeMismatch, ZeroInverse
from vecgroupoid.linalg import (
    FieldSpec,
    Matrix,
    block,
    ff_inv,
    hstack,
    is_prime,
    kernel_basis,
    left_inverse,
    mat_mul,
    mat_rank,
    solve_linear,
    vstack,
)

F2, F3, F5 = FieldSpec(2), FieldSpec(3), FieldSpec(5)


def M(rows, f=F2, cols=None):
    return Matrix.from_rows(rows, f, cols=cols)


class TestField:
    @pytest.mark.parametrize("p", [4, 6, 1, 0, 257, 9])
    def test_rejects_non_primes(self, p):
        with pytest.raises(NotPrime):
            FieldSpec(p)

    def test_prime_table(self):
        assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    @pytest.mark.parametrize("a,p,expected", [(1, 2, 1), (2, 5, 3)])
    def test_inverse_examples(self, a, p, expected):
        assert ff_inv(a, FieldSpec(p)) == expected

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroInverse):
            ff_inv(0, F3)

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 251])
    def test_inverse_is_involutive(self, p):
        f = FieldSpec(p)
        for a in range(1, min(p, 60)):
            b = ff_inv(a, f)
            assert a * b % p == 1
            assert ff_inv(b, f) == a


class TestMatrix:
    def test_identity_squared(self):
        i2 = Matrix.identity(2, F2)
        assert mat_mul(i2, i2) == i2

    def test_hand_product(self):
        assert (M([[1, 0]]) @ M([[0, 1], [1, 0]])).tolist() == [[0, 1]]

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            M([[1, 0]]) @ M([[1, 0]])

    def test_entries_must_be_reduced(self):
        with pytest.raises(BadCoordinate):
            Matrix(1, 1, (2,), F2)

    def test_negation_is_modular(self):
        assert (-M([[1, 2, 0]], F3)).tolist() == [[2, 1, 0]]

    def test_stacking(self):
        a, b = M([[1, 0]]), M([[0, 1]])
        assert vstack([a, b]) == Matrix.identity(2, F2)
        assert hstack([M([[1], [0]]), M([[0], [1]])]) == Matrix.identity(2, F2)
        assert block([[a], [b]]) == Matrix.identity(2, F2)

    def test_empty_shapes(self):
        z = Matrix.zeros(0, 3, F2)
        assert z.shape == (0, 3)
        assert (Matrix.zeros(3, 0, F2) @ Matrix.zeros(0, 2, F2)) == Matrix.zeros(3, 2, F2)

    def test_apply_and_transpose(self):
        a = M([[1, 2], [0, 1]], F3)
        assert a.apply((1, 1)) == (0, 1)
        assert a.transpose().tolist() == [[1, 0], [2, 1]]


class TestRank:
    @pytest.mark.parametrize("rows,expected", [
        ([[1, 0], [0, 1]], 2),
        ([[1, 0], [1, 0]], 1),
        ([[1], [1]], 1),
    ])
    def test_examples(self, rows, expected):
        assert mat_rank(M(rows)) == expected

    @pytest.mark.parametrize("p", [2, 3])
    def test_matches_span_enumeration_exhaustively(self, p):
        """Every matrix with rows*cols <= 9."""
        f = FieldSpec(p)
        checked = 0
        for r in range(1, 4):
            for c in range(1, 4):
                if r * c > 9:
                    continue
                for flat in product(range(p), repeat=r * c):
                    rows = [list(flat[i * c:(i + 1) * c]) for i in range(r)]
                    assert mat_rank(M(rows, f)) == rank_by_span(rows, c, p), rows
                    checked += 1
        assert checked == sum(p ** (r * c) for r in range(1, 4) for c in range(1, 4) if r * c <= 9)


class TestKernel:
    def test_examples(self):
        assert kernel_basis(M([[1, 1]])) == [(1, 1)]
        assert kernel_basis(Matrix.identity(2, F3)) == []
        assert len(kernel_basis(Matrix.zeros(1, 2, F2))) == 2

    def test_matches_enumeration(self):
        for flat in product(range(3), repeat=6):
            rows = [list(flat[:3]), list(flat[3:])]
            a = M(rows, F3)
            basis = kernel_basis(a)
            assert len(basis) + mat_rank(a) == 3
            assert span_by_enumeration(basis, 3, 3) == kernel_by_enumeration(rows, 3, 3)


class TestSolve:
    def test_identity(self):
        assert solve_linear(Matrix.identity(2, F2), (1, 0)) == (1, 0)

    def test_underdetermined_sets_free_variables_to_zero(self):
        x = solve_linear(M([[1, 1]]), (1,))
        assert x in {(1, 0), (0, 1)}
        assert x == (1, 0)

    def test_inconsistent(self):
        with pytest.raises(NoSolution):
            solve_linear(Matrix.zeros(1, 1, F2), (1,))

    def test_left_inverse(self):
        b = M([[1, 0], [0, 1], [1, 1]], F3)
        assert left_inverse(b) @ b == Matrix.identity(2, F3)


def matrices(max_dim=4):
    @st.composite
    def build(draw):
        p = draw(st.sampled_from([2, 3, 5, 7]))
        r = draw(st.integers(1, max_dim))
        c = draw(st.integers(1, max_dim))
        flat = draw(st.lists(st.integers(0, p - 1), min_size=r * c, max_size=r * c))
        return Matrix.from_rows([flat[i * c:(i + 1) * c] for i in range(r)], FieldSpec(p))
    return build()


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_kernel_rank_nullity(a):
    basis = kernel_basis(a)
    assert len(basis) + mat_rank(a) == a.cols
    for v in basis:
        assert not any(a.apply(v))
    if basis:
        assert mat_rank(Matrix.from_rows(basis, a.field)) == len(basis)


@settings(max_examples=200, deadline=None)
@given(matrices(), st.data())
def test_solutions_satisfy_system(a, data):
    p = a.field.p
    b = tuple(data.draw(st.lists(st.integers(0, p - 1), min_size=a.rows, max_size=a.rows)))
    try:
        x = solve_linear(a, b)
    except NoSolution:
        # inconsistent: b lies outside the column span
        assert mat_rank(hstack([a, Matrix.from_columns([b], a.field, a.rows)])) > mat_rank(a)
        return
    assert a.apply(x) == b
    assert mat_vec(a.tolist(), x, p) == b


@settings(max_examples=100, deadline=None)
@given(matrices(3), st.data())
def test_multiplication_is_associative(a, data):
    p, f = a.field.p, a.field
    k = data.draw(st.integers(1, 3))
    j = data.draw(st.integers(1, 3))
    b = Matrix.from_rows([[data.draw(st.integers(0, p - 1)) for _ in range(k)] for _ in range(a.cols)], f)
    c = Matrix.from_rows([[data.draw(st.integers(0, p - 1)) for _ in range(j)] for _ in range(k)], f)
    assert (a @ b) @ c == a @ (b @ c)
