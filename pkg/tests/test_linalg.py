"""
域与精确线性代数的测试。
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupoid_duality.algebra import (
    FieldSpec,
    Matrix,
    block_diagonal,
    inverse,
    kernel_basis,
    kron,
    rank,
    rref,
    same_span,
    solve_linear,
    span_basis,
)
from groupoid_duality.errors import FieldMismatchError, MalformedInputError, SingularMatrixError

FIELDS = [FieldSpec.rational(), FieldSpec.prime(5)]


def int_matrices(max_rows: int = 4, max_cols: int = 4):
    """小整数矩阵的取值表。"""
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            )
        )
    )


def square_matrices(max_size: int = 4):
    return st.integers(1, max_size).flatmap(
        lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)
    )


# ========================
# 域
# ========================

def test_parse_field_names():
    assert FieldSpec.parse("rational") == FieldSpec.rational()
    assert FieldSpec.parse("fp:7") == FieldSpec.prime(7)
    assert FieldSpec.parse(" FP:5 ") == FieldSpec.prime(5)


@pytest.mark.parametrize("text", ["fp:4", "fp:x", "real", ""])
def test_parse_field_rejects_bad_names(text):
    with pytest.raises(MalformedInputError):
        FieldSpec.parse(text)


def test_scalar_formats(qq, f5):
    assert qq.format(qq.parse_scalar("-6/4")) == "-3/2"
    assert qq.format(qq.parse_scalar("7")) == "7"
    assert f5.format(f5.parse_scalar("7")) == "2 mod 5"
    assert f5.format(f5.parse_scalar("3 mod 5")) == "3 mod 5"
    assert f5.format(f5.parse_scalar("1/2")) == "3 mod 5"


def test_scalar_from_other_prime_is_rejected(f5):
    with pytest.raises(FieldMismatchError):
        f5.parse_scalar("1 mod 7")


def test_zero_denominator(qq, f5):
    with pytest.raises(MalformedInputError):
        qq.parse_scalar("1/0")
    with pytest.raises(MalformedInputError):
        f5.parse_scalar("1/5")


def test_matrices_over_different_fields_do_not_mix(qq, f5):
    with pytest.raises(FieldMismatchError):
        Matrix.identity(2, qq) @ Matrix.identity(2, f5)


# ========================
# 行化简与零空间
# ========================

def test_rref_example(qq):
    m = Matrix.from_values([[1, 2, 3], [2, 4, 6], [1, 0, 1]], qq)
    reduced, r, pivots = rref(m)
    assert r == 2
    assert pivots == [0, 1]
    assert reduced == Matrix.from_values([[1, 0, 1], [0, 1, 1], [0, 0, 0]], qq)


def test_rank_depends_on_characteristic(qq, f5):
    values = [[1, 2], [3, 1]]
    assert rank(Matrix.from_values(values, qq)) == 2
    assert rank(Matrix.from_values(values, f5)) == 1


def test_kernel_of_row_vector(qq):
    k = kernel_basis(Matrix.from_values([[1, 1]], qq))
    assert k == Matrix.from_values([[-1], [1]], qq)


def test_empty_matrices(qq):
    assert rank(Matrix.zeros(0, 3, qq)) == 0
    assert kernel_basis(Matrix.zeros(0, 3, qq)).is_identity()
    assert inverse(Matrix.identity(0, qq)).shape == (0, 0)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=40, deadline=None)
@given(values=int_matrices())
def test_rref_is_idempotent(field, values):
    m = Matrix.from_values(values, field)
    reduced, r, pivots = rref(m)
    again, r2, pivots2 = rref(reduced)
    assert again == reduced
    assert (r, pivots) == (r2, pivots2)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=40, deadline=None)
@given(values=int_matrices())
def test_rank_of_transpose(field, values):
    m = Matrix.from_values(values, field)
    assert rank(m) == rank(m.transpose())


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=40, deadline=None)
@given(values=int_matrices())
def test_kernel_is_annihilated(field, values):
    m = Matrix.from_values(values, field)
    k = kernel_basis(m)
    assert k.shape == (m.cols, m.cols - rank(m))
    assert (m @ k).is_zero()
    assert rank(k) == k.cols


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=40, deadline=None)
@given(values=int_matrices(), data=st.data())
def test_solve_consistent_system(field, values, data):
    a = Matrix.from_values(values, field)
    x = Matrix.from_values([[data.draw(st.integers(-2, 2))] for _ in range(a.cols)], field)
    b = a @ x
    solution = solve_linear(a, b)
    assert solution is not None
    assert a @ solution == b


def test_solve_inconsistent_system(qq):
    a = Matrix.from_values([[1, 1], [2, 2]], qq)
    b = Matrix.from_values([[1], [3]], qq)
    assert solve_linear(a, b) is None


def test_solve_row_mismatch(qq):
    with pytest.raises(MalformedInputError):
        solve_linear(Matrix.identity(2, qq), Matrix.identity(3, qq))


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=40, deadline=None)
@given(values=square_matrices())
def test_inverse_when_full_rank(field, values):
    m = Matrix.from_values(values, field)
    if rank(m) < m.rows:
        with pytest.raises(SingularMatrixError):
            inverse(m)
        return
    m_inv = inverse(m)
    assert (m @ m_inv).is_identity()
    assert (m_inv @ m).is_identity()


def test_inverse_of_rational_matrix(qq):
    m = Matrix.from_values([[2, 1], [0, 1]], qq)
    assert inverse(m) == Matrix.from_values([["1/2", "-1/2"], [0, 1]], qq)


def test_inverse_needs_square(qq):
    with pytest.raises(MalformedInputError):
        inverse(Matrix.zeros(2, 3, qq))


# ========================
# Kronecker 积与分块
# ========================

@settings(max_examples=25, deadline=None)
@given(a=int_matrices(2, 2), b=int_matrices(2, 2), c=int_matrices(2, 2), d=int_matrices(2, 2))
def test_kron_mixed_product(a, b, c, d):
    """(A⊗B)(C⊗D) = AC⊗BD，形状允许时检查。"""
    qq = FieldSpec.rational()
    a, b, c, d = (Matrix.from_values(v, qq) for v in (a, b, c, d))
    if a.cols != c.rows or b.cols != d.rows:
        return
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=25, deadline=None)
@given(a=int_matrices(2, 3), b=int_matrices(3, 2), c=int_matrices(2, 2))
def test_kron_is_associative(field, a, b, c):
    a, b, c = (Matrix.from_values(v, field) for v in (a, b, c))
    left = kron(kron(a, b), c)
    assert left.shape == (a.rows * b.rows * c.rows, a.cols * b.cols * c.cols)
    assert left == kron(a, kron(b, c))


def test_kron_shape_and_entries(qq):
    a = Matrix.from_values([[1, 2]], qq)
    b = Matrix.from_values([[0], [1]], qq)
    assert kron(a, b) == Matrix.from_values([[0, 0], [1, 2]], qq)


def test_block_diagonal(qq):
    m = block_diagonal([Matrix.identity(1, qq), Matrix.from_values([[0, 1], [1, 0]], qq)], qq)
    assert m == Matrix.from_values([[1, 0, 0], [0, 0, 1], [0, 1, 0]], qq)


def test_span_basis_and_same_span(qq):
    one = qq.one
    u = [{0: one}, {1: one}, {0: one, 1: one}]
    v = [{0: one, 1: one}, {0: one, 1: -one}]
    assert len(span_basis(u, 2, qq)) == 2
    assert same_span(u, v, 2, qq)
    assert not same_span(u[:1], v[:1], 2, qq)


def test_matrix_string_round_trip(qq):
    m = Matrix.from_values([["1/3", -2], [0, 5]], qq)
    assert Matrix.from_strings(m.to_strings(), qq) == m
    assert m.to_strings() == [["1/3", "-2"], ["0", "5"]]
