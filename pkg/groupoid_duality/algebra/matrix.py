"""
稠密矩阵模块。

矩阵在构造后不再修改，元素是 FieldSpec.domain 中的元素。
为了加速稀疏的置换矩阵和结构常数运算，行和列的稀疏视图会被缓存。
"""

from functools import cached_property
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from groupoid_duality.algebra.field import FieldSpec, Scalar
from groupoid_duality.errors import MalformedInputError

SparseVector = Dict[int, Any]


class Matrix:
    """域上的稠密矩阵。"""

    def __init__(self, rows: Sequence[Sequence[Any]], field: FieldSpec, n_rows: int = None, n_cols: int = None):
        """
        初始化矩阵。

        Args:
            rows: 按行给出的域元素
            field: 基域
            n_rows: 行数（rows 为空时用来表示 0×n 的矩阵）
            n_cols: 列数（用来表示 n×0 的矩阵）

        Raises:
            MalformedInputError: 行长度不一致
        """
        self.field = field
        self._rows = [list(row) for row in rows]
        self.rows = len(self._rows) if n_rows is None else n_rows
        if n_cols is None:
            n_cols = len(self._rows[0]) if self._rows else 0
        self.cols = n_cols
        if len(self._rows) != self.rows:
            raise MalformedInputError(f"行数不一致: 声明 {self.rows}，实际 {len(self._rows)}")
        for row in self._rows:
            if len(row) != self.cols:
                raise MalformedInputError(f"行长度不一致: 期望 {self.cols}，得到 {len(row)}")

    # ---- 构造 ----

    @classmethod
    def from_values(cls, values: Sequence[Sequence[Any]], field: FieldSpec, n_cols: int = None) -> "Matrix":
        """从整数、分数或标量字符串构造矩阵。"""
        return cls([[field.element(v) for v in row] for row in values], field, n_cols=n_cols)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int, field: FieldSpec) -> "Matrix":
        return cls([[field.zero] * n_cols for _ in range(n_rows)], field, n_rows, n_cols)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Matrix":
        rows = [[field.zero] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = field.one
        return cls(rows, field, n, n)

    @classmethod
    def from_sparse_columns(cls, columns: Sequence[SparseVector], n_rows: int, field: FieldSpec) -> "Matrix":
        """由稀疏列向量构造矩阵，列数等于给出的列向量个数。"""
        rows = [[field.zero] * len(columns) for _ in range(n_rows)]
        for j, column in enumerate(columns):
            for i, value in column.items():
                rows[i][j] = value
        return cls(rows, field, n_rows, len(columns))

    @classmethod
    def from_sparse_rows(cls, sparse_rows: Sequence[SparseVector], n_cols: int, field: FieldSpec) -> "Matrix":
        rows = []
        for sparse in sparse_rows:
            row = [field.zero] * n_cols
            for j, value in sparse.items():
                row[j] = value
            rows.append(row)
        return cls(rows, field, len(rows), n_cols)

    @classmethod
    def from_strings(cls, data: Sequence[Sequence[str]], field: FieldSpec, n_cols: int = None) -> "Matrix":
        """解析嵌套的标量字符串数组。"""
        if not isinstance(data, list) or any(not isinstance(row, list) for row in data):
            raise MalformedInputError("矩阵必须是嵌套数组")
        return cls([[field.parse_scalar(str(v)) for v in row] for row in data], field, n_cols=n_cols)

    # ---- 访问 ----

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> List[Scalar]:
        """按行展开的带域标签标量。"""
        return [Scalar(v, self.field) for row in self._rows for v in row]

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return Scalar(self._rows[i][j], self.field)

    def value(self, i: int, j: int) -> Any:
        """返回原始域元素。"""
        return self._rows[i][j]

    def row(self, i: int) -> List[Any]:
        return list(self._rows[i])

    def column(self, j: int) -> List[Any]:
        return [row[j] for row in self._rows]

    def to_lists(self) -> List[List[Any]]:
        return [list(row) for row in self._rows]

    def to_strings(self) -> List[List[str]]:
        return [[self.field.format(v) for v in row] for row in self._rows]

    @cached_property
    def sparse_rows(self) -> List[SparseVector]:
        return [{j: v for j, v in enumerate(row) if v} for row in self._rows]

    @cached_property
    def sparse_columns(self) -> List[SparseVector]:
        columns: List[SparseVector] = [{} for _ in range(self.cols)]
        for i, row in enumerate(self.sparse_rows):
            for j, v in row.items():
                columns[j][i] = v
        return columns

    # ---- 运算 ----

    def _check_field(self, other: "Matrix") -> None:
        self.field.check_same(other.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise MalformedInputError(f"矩阵乘法维数不匹配: {self.shape} @ {other.shape}")
        zero = self.field.zero
        result = []
        other_rows = other.sparse_rows
        for sparse in self.sparse_rows:
            acc = [zero] * other.cols
            for k, a in sparse.items():
                for j, b in other_rows[k].items():
                    acc[j] = acc[j] + a * b
            result.append(acc)
        return Matrix(result, self.field, self.rows, other.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise MalformedInputError(f"矩阵加法维数不匹配: {self.shape} + {other.shape}")
        rows = [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        return Matrix(rows, self.field, self.rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix([[-v for v in row] for row in self._rows], self.field, self.rows, self.cols)

    def scale(self, c: Any) -> "Matrix":
        c = self.field.element(c)
        return Matrix([[c * v for v in row] for row in self._rows], self.field, self.rows, self.cols)

    def transpose(self) -> "Matrix":
        rows = [[self._rows[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return Matrix(rows, self.field, self.cols, self.rows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def apply(self, vector: SparseVector) -> SparseVector:
        """把矩阵作用在稀疏列向量上。"""
        result: SparseVector = {}
        columns = self.sparse_columns
        for j, c in vector.items():
            for i, v in columns[j].items():
                value = result.get(i, self.field.zero) + c * v
                if value:
                    result[i] = value
                else:
                    result.pop(i, None)
        return result

    def submatrix(self, row_indices: Iterable[int], col_indices: Iterable[int]) -> "Matrix":
        row_indices = list(row_indices)
        col_indices = list(col_indices)
        rows = [[self._rows[i][j] for j in col_indices] for i in row_indices]
        return Matrix(rows, self.field, len(row_indices), len(col_indices))

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.rows != other.rows:
            raise MalformedInputError(f"横向拼接行数不匹配: {self.rows} 与 {other.rows}")
        rows = [r + s for r, s in zip(self._rows, other._rows)]
        return Matrix(rows, self.field, self.rows, self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.cols:
            raise MalformedInputError(f"纵向拼接列数不匹配: {self.cols} 与 {other.cols}")
        return Matrix(self._rows + other._rows, self.field, self.rows + other.rows, self.cols)

    # ---- 判定 ----

    def is_zero(self) -> bool:
        return not any(self.sparse_rows)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(row == ({i: self.field.one}) for i, row in enumerate(self.sparse_rows))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Matrix):
            return False
        return self.field == other.field and self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.field, self.shape, tuple(tuple(self.field.key(v) for v in row) for row in self._rows)))

    def __repr__(self) -> str:
        return f"Matrix({self.to_strings()!r}, {self.field})"
