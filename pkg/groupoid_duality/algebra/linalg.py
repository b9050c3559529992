"""
精确线性代数运算：行最简形、秩、零空间、线性方程组、Kronecker 积与逆矩阵。

行化简交给 sympy 的 DomainMatrix，主元选择是确定性的（最左列，最小行号）。
"""

from typing import Any, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.algebra.matrix import Matrix, SparseVector
from groupoid_duality.errors import MalformedInputError, SingularMatrixError


def rref(m: Matrix) -> Tuple[Matrix, int, List[int]]:
    """
    计算行最简形。

    Args:
        m: 输入矩阵

    Returns:
        (行最简形矩阵, 秩, 主元列列表)
    """
    if m.rows == 0 or m.cols == 0:
        return Matrix.zeros(m.rows, m.cols, m.field), 0, []
    dm = DomainMatrix(m.to_lists(), (m.rows, m.cols), m.field.domain)
    reduced, pivots = dm.rref()
    pivots = [int(p) for p in pivots]
    return Matrix(reduced.to_list(), m.field, m.rows, m.cols), len(pivots), pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel_basis(m: Matrix) -> Matrix:
    """
    零空间的一组基，按列返回。

    每个自由列给出一个基向量：自由坐标取 1，主元坐标由行最简形读出。

    Args:
        m: 输入矩阵

    Returns:
        m.cols × (m.cols - rank) 的矩阵
    """
    field = m.field
    reduced, _, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    columns: List[SparseVector] = []
    for f in free:
        vector: SparseVector = {f: field.one}
        for r, p in enumerate(pivots):
            value = reduced.value(r, f)
            if value:
                vector[p] = -value
        columns.append(vector)
    return Matrix.from_sparse_columns(columns, m.cols, field)


def solve_linear(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """
    求解 a·x = b。

    Args:
        a: 系数矩阵
        b: 右端矩阵，行数必须与 a 相同

    Returns:
        一个解；方程组不相容时返回 None

    Raises:
        MalformedInputError: 行数不匹配
    """
    a.field.check_same(b.field)
    if a.rows != b.rows:
        raise MalformedInputError(f"线性方程组行数不匹配: {a.rows} 与 {b.rows}")
    field = a.field
    if a.rows == 0:
        return Matrix.zeros(a.cols, b.cols, field)
    reduced, _, pivots = rref(a.hstack(b))
    if any(p >= a.cols for p in pivots):
        return None
    rows = [[field.zero] * b.cols for _ in range(a.cols)]
    for r, p in enumerate(pivots):
        for j in range(b.cols):
            rows[p][j] = reduced.value(r, a.cols + j)
    return Matrix(rows, field, a.cols, b.cols)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker 积，(i,j) 块为 a[i][j]·b。"""
    a.field.check_same(b.field)
    field = a.field
    n_rows = a.rows * b.rows
    n_cols = a.cols * b.cols
    rows = [[field.zero] * n_cols for _ in range(n_rows)]
    b_rows = b.sparse_rows
    for i, a_row in enumerate(a.sparse_rows):
        for j, x in a_row.items():
            for k, b_row in enumerate(b_rows):
                target = rows[i * b.rows + k]
                for l, y in b_row.items():
                    target[j * b.cols + l] = x * y
    return Matrix(rows, field, n_rows, n_cols)


def inverse(m: Matrix) -> Matrix:
    """
    求逆矩阵。

    对 [m | I] 做行化简，主元恰好落在前 n 列时右半部分就是逆。

    Raises:
        MalformedInputError: 不是方阵
        SingularMatrixError: 矩阵奇异
    """
    if m.rows != m.cols:
        raise MalformedInputError(f"只能对方阵求逆，得到 {m.shape}")
    n = m.rows
    if n == 0:
        return Matrix.identity(0, m.field)
    reduced, _, pivots = rref(m.hstack(Matrix.identity(n, m.field)))
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError(f"矩阵奇异，秩为 {len([p for p in pivots if p < n])}")
    return reduced.submatrix(range(n), range(n, 2 * n))


def block_diagonal(blocks: Sequence[Matrix], field: FieldSpec) -> Matrix:
    """分块对角矩阵。"""
    n_rows = sum(b.rows for b in blocks)
    n_cols = sum(b.cols for b in blocks)
    rows = [[field.zero] * n_cols for _ in range(n_rows)]
    r0 = c0 = 0
    for block in blocks:
        field.check_same(block.field)
        for i, sparse in enumerate(block.sparse_rows):
            for j, v in sparse.items():
                rows[r0 + i][c0 + j] = v
        r0 += block.rows
        c0 += block.cols
    return Matrix(rows, field, n_rows, n_cols)


def span_basis(vectors: Sequence[SparseVector], dim: int, field: FieldSpec) -> List[SparseVector]:
    """
    一组稀疏向量张成的子空间的规范基（行最简形的非零行）。

    Args:
        vectors: 稀疏向量
        dim: 环境空间维数
        field: 基域

    Returns:
        规范基，两个子空间相等当且仅当规范基相等
    """
    if not vectors:
        return []
    reduced, r, _ = rref(Matrix.from_sparse_rows(vectors, dim, field))
    return [dict(row) for row in reduced.sparse_rows[:r]]


def same_span(u: Sequence[SparseVector], v: Sequence[SparseVector], dim: int, field: FieldSpec) -> bool:
    """判断两组向量张成的子空间是否相等。"""
    return span_basis(u, dim, field) == span_basis(v, dim, field)


def rank_of_vectors(vectors: Sequence[SparseVector], dim: int, field: FieldSpec) -> int:
    if not vectors:
        return 0
    return rank(Matrix.from_sparse_rows(vectors, dim, field))


def accumulate(target: SparseVector, v: SparseVector, scale: Any = None) -> None:
    """原地执行 target += scale·v。"""
    for k, value in v.items():
        if scale is not None:
            value = scale * value
        total = target[k] + value if k in target else value
        if total:
            target[k] = total
        else:
            target.pop(k, None)
