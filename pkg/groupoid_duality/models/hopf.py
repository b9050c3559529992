"""
Hopf 代数胚数据模型模块。

定义有限维交换代数、分裂代数、按底代数幂等元分次的双模及其平衡张量积、
交换 Hopf 代数胚、Hopf 代数胚态射、余模以及特征标群胚。

约定：H 作为 R 双模时，左作用来自靶 η_t，右作用来自源 η_s；
基元素 b 的分次 (y, x) 表示 η_t(e_y)·b·η_s(e_x) = b。
"""

from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.algebra.linalg import accumulate
from groupoid_duality.algebra.matrix import Matrix, SparseVector
from groupoid_duality.errors import DualityError, GradingError, MalformedInputError
from groupoid_duality.models.groupoid import FiniteGroupoid


def _vector_to_dict(vec: SparseVector, names: Sequence[str], field: FieldSpec) -> Dict[str, str]:
    return {names[k]: field.format(v) for k, v in sorted(vec.items())}


def _vector_from_dict(data: Dict[str, str], index: Dict[str, int], field: FieldSpec) -> SparseVector:
    vec = {}
    for name, value in data.items():
        if name not in index:
            raise MalformedInputError(f"未知的基元素: {name!r}")
        parsed = field.parse_scalar(str(value))
        if parsed:
            vec[index[name]] = parsed
    return vec


class CommutativeAlgebra:
    """有限维交换代数，由基和结构常数给出，可选带一组正交幂等元基作为分裂见证。"""

    def __init__(
        self,
        field: FieldSpec,
        basis_names: Sequence[str],
        products: Dict[Tuple[int, int], SparseVector],
        unit: SparseVector,
        split_witness: Optional[Matrix] = None,
        name: str = "",
    ):
        """
        初始化交换代数。

        Args:
            field: 基域
            basis_names: 基元素名称
            products: (i, j) -> bᵢ·bⱼ 的非零乘积，只需给出 i ≤ j 的一半
            unit: 单位元的坐标
            split_witness: 列为正交幂等元的可逆矩阵（可选）
            name: 代数名称
        """
        self.field = field
        self.basis_names = list(basis_names)
        self.name = name
        self._products: Dict[Tuple[int, int], SparseVector] = {}
        for (i, j), vec in products.items():
            vec = {k: v for k, v in vec.items() if v}
            if vec:
                self._products[(min(i, j), max(i, j))] = vec
        self.unit = {k: v for k, v in unit.items() if v}
        self.split_witness = split_witness
        n = len(self.basis_names)
        if split_witness is not None and split_witness.shape != (n, n):
            raise MalformedInputError("分裂见证必须是 dim × dim 矩阵")

    @property
    def dimension(self) -> int:
        return len(self.basis_names)

    @property
    def is_split(self) -> bool:
        return self.split_witness is not None

    @property
    def is_delta_basis(self) -> bool:
        """基本身就是正交幂等元基。"""
        return False

    @cached_property
    def partners(self) -> List[List[int]]:
        """partners[i] 为与 bᵢ 乘积非零的 j。"""
        table: List[List[int]] = [[] for _ in range(self.dimension)]
        for (i, j) in self._products:
            table[i].append(j)
            if i != j:
                table[j].append(i)
        return [sorted(p) for p in table]

    def product(self, i: int, j: int) -> SparseVector:
        return self._products.get((min(i, j), max(i, j)), {})

    def multiply(self, u: SparseVector, v: SparseVector) -> SparseVector:
        """两个稀疏向量的乘积。"""
        result: SparseVector = {}
        for i, a in u.items():
            for j in self.partners[i]:
                b = v.get(j)
                if b is None:
                    continue
                accumulate(result, self.product(i, j), a * b)
        return result

    def basis_vector(self, i: int) -> SparseVector:
        return {i: self.field.one}

    def to_dict(self) -> Dict[str, Any]:
        names = self.basis_names
        return {
            "name": self.name,
            "basis": list(names),
            "products": [[names[i], names[j], _vector_to_dict(v, names, self.field)] for (i, j), v in sorted(self._products.items())],
            "unit": _vector_to_dict(self.unit, names, self.field),
            "split_witness": self.split_witness.to_strings() if self.split_witness is not None else None,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], field: FieldSpec) -> "CommutativeAlgebra":
        if data.get("delta_basis"):
            return SplitAlgebra.from_dict(data, field)
        try:
            names = [str(n) for n in data["basis"]]
            index = {n: i for i, n in enumerate(names)}
            products = {}
            for left, right, vec in data["products"]:
                products[(index[str(left)], index[str(right)])] = _vector_from_dict(vec, index, field)
            unit = _vector_from_dict(data["unit"], index, field)
            witness = data.get("split_witness")
            witness = Matrix.from_strings(witness, field, n_cols=len(names)) if witness is not None else None
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, DualityError):
                raise
            raise MalformedInputError(f"代数结构错误: {e!r}")
        return cls(field, names, products, unit, witness, data.get("name", ""))

    @classmethod
    def truncated_polynomial(cls, field: FieldSpec, degree: int) -> "CommutativeAlgebra":
        """k[x]/(x^degree)，基为 1, x, ..., x^(degree-1)。"""
        if degree < 1:
            raise MalformedInputError("截断多项式的次数至少为 1")
        products = {}
        for i in range(degree):
            for j in range(i, degree):
                if i + j < degree:
                    products[(i, j)] = {i + j: field.one}
        names = ["1"] + [f"x^{k}" if k > 1 else "x" for k in range(1, degree)]
        return cls(field, names, products, {0: field.one}, None, f"k[x]/(x^{degree})")

    def get_summary(self) -> str:
        kind = "分裂" if self.is_split else "未知分裂"
        return f"交换代数 {self.name or '(未命名)'}: 维数 {self.dimension}，{kind}"

    def __repr__(self) -> str:
        return f"CommutativeAlgebra({self.name!r}, dim={self.dimension})"


class SplitAlgebra(CommutativeAlgebra):
    """分裂代数 k^S，基为 δ 函数，逐点运算。"""

    def __init__(self, field: FieldSpec, index_names: Sequence[str], name: str = ""):
        n = len(index_names)
        super().__init__(
            field,
            index_names,
            {(i, i): {i: field.one} for i in range(n)},
            {i: field.one for i in range(n)},
            None,
            name,
        )

    @property
    def is_split(self) -> bool:
        return True

    @property
    def is_delta_basis(self) -> bool:
        return True

    def multiply(self, u: SparseVector, v: SparseVector) -> SparseVector:
        result = {}
        for i, a in u.items():
            b = v.get(i)
            if b is not None and a * b:
                result[i] = a * b
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "basis": list(self.basis_names), "delta_basis": True}

    @classmethod
    def from_dict(cls, data: Dict[str, Any], field: FieldSpec) -> "SplitAlgebra":
        try:
            names = [str(n) for n in data["basis"]]
        except (KeyError, TypeError) as e:
            raise MalformedInputError(f"分裂代数缺少基: {e!r}")
        return cls(field, names, data.get("name", ""))


class GradedBimodule:
    """分裂底代数 k^n 上的双模，每个基元素落在某个 (左, 右) 幂等元块中。"""

    def __init__(self, field: FieldSpec, n_base: int, grades: Sequence[Tuple[int, int]]):
        for grade in grades:
            if not (0 <= grade[0] < n_base and 0 <= grade[1] < n_base):
                raise GradingError(f"分次 {grade} 超出底代数范围")
        self.field = field
        self.n_base = n_base
        self.grades = [tuple(g) for g in grades]

    @property
    def dimension(self) -> int:
        return len(self.grades)

    @cached_property
    def blocks(self) -> Dict[Tuple[int, int], List[int]]:
        table: Dict[Tuple[int, int], List[int]] = {}
        for i, grade in enumerate(self.grades):
            table.setdefault(grade, []).append(i)
        return table

    @cached_property
    def blocks_by_left(self) -> Dict[int, List[int]]:
        table: Dict[int, List[int]] = {}
        for i, (y, _) in enumerate(self.grades):
            table.setdefault(y, []).append(i)
        return table

    def block(self, y: int, x: int) -> List[int]:
        return self.blocks.get((y, x), [])

    def block_sizes(self) -> Dict[Tuple[int, int], int]:
        return {(y, x): len(self.block(y, x)) for y in range(self.n_base) for x in range(self.n_base)}


class TensorProduct(GradedBimodule):
    """
    平衡张量积 M ⊗_R N：基为满足 M 的右分次等于 N 的左分次的对 (i, j)，
    (x, z) 块等于 ⊕_y M_(x,y) ⊗ N_(y,z)。
    """

    def __init__(self, left: GradedBimodule, right: GradedBimodule):
        if left.n_base != right.n_base:
            raise GradingError("两个双模的底代数不同")
        left.field.check_same(right.field)
        pairs = []
        for i, (yl, xl) in enumerate(left.grades):
            for j in right.blocks_by_left.get(xl, []):
                pairs.append((i, j))
        super().__init__(left.field, left.n_base, [(left.grades[i][0], right.grades[j][1]) for i, j in pairs])
        self.left = left
        self.right = right
        self.pairs = pairs
        self.index = {p: k for k, p in enumerate(pairs)}

    def pair_index(self, i: int, j: int) -> Optional[int]:
        """bᵢ ⊗ bⱼ 在平衡张量积中的编号；分次不匹配时该张量为零，返回 None。"""
        return self.index.get((i, j))


class HopfAlgebroid:
    """
    分裂底代数上的有限维交换 Hopf 代数胚 (R, H)。

    结构映射都以矩阵给出（列为基元素的像）：
    source/target 为 dim H × dim R，counit 为 dim R × dim H，
    comultiplication 为 dim(H ⊗_R H) × dim H，antipode 为 dim H × dim H。
    """

    def __init__(
        self,
        base: SplitAlgebra,
        total: CommutativeAlgebra,
        source: Matrix,
        target: Matrix,
        counit: Matrix,
        comultiplication: Matrix,
        antipode: Matrix,
        name: str = "",
    ):
        """
        初始化 Hopf 代数胚。

        Raises:
            MalformedInputError: 结构映射的形状不对
        """
        base.field.check_same(total.field)
        n, m = base.dimension, total.dimension
        expected = {
            "source": (source, (m, n)),
            "target": (target, (m, n)),
            "counit": (counit, (n, m)),
            "antipode": (antipode, (m, m)),
        }
        for label, (matrix, shape) in expected.items():
            if matrix.shape != shape:
                raise MalformedInputError(f"{label} 的形状为 {matrix.shape}，期望 {shape}")
        if comultiplication.cols != m:
            raise MalformedInputError(f"comultiplication 的列数为 {comultiplication.cols}，期望 {m}")
        self.base = base
        self.total = total
        self.field = total.field
        self.source = source
        self.target = target
        self.counit = counit
        self.comultiplication = comultiplication
        self.antipode = antipode
        self.name = name

    @property
    def base_dimension(self) -> int:
        return self.base.dimension

    @property
    def dimension(self) -> int:
        return self.total.dimension

    @cached_property
    def grading(self) -> List[Tuple[int, int]]:
        """
        每个基元素的分次 (y, x)。

        Raises:
            GradingError: 基元素不是齐次的
        """
        n = self.base_dimension
        t_idem = [self.source_or_target(self.target, y) for y in range(n)]
        s_idem = [self.source_or_target(self.source, x) for x in range(n)]
        grades = []
        for i in range(self.dimension):
            b = self.total.basis_vector(i)
            lefts = [y for y in range(n) if self.total.multiply(t_idem[y], b)]
            rights = [x for x in range(n) if self.total.multiply(b, s_idem[x])]
            if len(lefts) != 1 or len(rights) != 1:
                raise GradingError(f"基元素 {self.total.basis_names[i]} 不是齐次的")
            y, x = lefts[0], rights[0]
            if self.total.multiply(self.total.multiply(t_idem[y], b), s_idem[x]) != b:
                raise GradingError(f"基元素 {self.total.basis_names[i]} 不是齐次的")
            grades.append((y, x))
        return grades

    def source_or_target(self, matrix: Matrix, x: int) -> SparseVector:
        return dict(matrix.sparse_columns[x])

    def eta_s(self, r: SparseVector) -> SparseVector:
        return self.source.apply(r)

    def eta_t(self, r: SparseVector) -> SparseVector:
        return self.target.apply(r)

    def epsilon(self, h: SparseVector) -> SparseVector:
        return self.counit.apply(h)

    def delta(self, h: SparseVector) -> SparseVector:
        return self.comultiplication.apply(h)

    def s_map(self, h: SparseVector) -> SparseVector:
        return self.antipode.apply(h)

    def multiply(self, u: SparseVector, v: SparseVector) -> SparseVector:
        return self.total.multiply(u, v)

    @cached_property
    def bimodule(self) -> GradedBimodule:
        return GradedBimodule(self.field, self.base_dimension, self.grading)

    @cached_property
    def tensor(self) -> TensorProduct:
        """H ⊗_R H。"""
        return TensorProduct(self.bimodule, self.bimodule)

    @cached_property
    def tensor3(self) -> TensorProduct:
        """(H ⊗_R H) ⊗_R H。"""
        return TensorProduct(self.tensor, self.bimodule)

    def tensor_multiply(self, u: SparseVector, v: SparseVector) -> SparseVector:
        """H ⊗_R H 中的乘法 (a ⊗ b)(c ⊗ d) = ac ⊗ bd。"""
        tensor = self.tensor
        by_first: Dict[int, List[Tuple[int, Any]]] = {}
        for k, c in v.items():
            i, j = tensor.pairs[k]
            by_first.setdefault(i, []).append((j, c))
        result: SparseVector = {}
        for k, a in u.items():
            i, j = tensor.pairs[k]
            for p in self.total.partners[i]:
                if p not in by_first:
                    continue
                left = self.total.product(i, p)
                for q, c in by_first[p]:
                    right = self.total.product(j, q)
                    if not right:
                        continue
                    coeff = a * c
                    for l, lv in left.items():
                        for r, rv in right.items():
                            idx = tensor.pair_index(l, r)
                            if idx is not None:
                                accumulate(result, {idx: coeff * lv * rv})
        return result

    def tensor_unit(self) -> SparseVector:
        """1 ⊗ 1 在 H ⊗_R H 中的像。"""
        result: SparseVector = {}
        for i, a in self.total.unit.items():
            for j, b in self.total.unit.items():
                idx = self.tensor.pair_index(i, j)
                if idx is not None:
                    accumulate(result, {idx: a * b})
        return result

    def isotropy_block(self, x: int) -> "HopfAlgebroid":
        """
        x 处的迷向 Hopf 代数 k_x ⊗_R H ⊗_R k_x，即分次为 (x, x) 的块。

        Returns:
            一点底代数上的 Hopf 代数（η_s = η_t）
        """
        field = self.field
        block = self.bimodule.block(x, x)
        position = {i: k for k, i in enumerate(block)}

        def restrict(vec: SparseVector) -> SparseVector:
            return {position[i]: v for i, v in vec.items() if i in position}

        products = {}
        for a, i in enumerate(block):
            for j in self.total.partners[i]:
                if j in position and position[j] >= a:
                    products[(a, position[j])] = restrict(self.total.product(i, j))
        unit = restrict(self.total.unit)
        names = [self.total.basis_names[i] for i in block]
        if self.total.is_delta_basis:
            total = SplitAlgebra(field, names, f"{self.name}_{x}")
        else:
            total = CommutativeAlgebra(field, names, products, unit, None, f"{self.name}_{x}")
        base = SplitAlgebra(field, [self.base.basis_names[x]])
        unit_column = Matrix.from_sparse_columns([unit], len(block), field)
        counit_row = {}
        for i in block:
            value = self.epsilon({i: field.one}).get(x)
            if value:
                counit_row[position[i]] = value
        counit = Matrix.from_sparse_rows([counit_row], len(block), field)
        inner = TensorProduct(GradedBimodule(field, 1, [(0, 0)] * len(block)), GradedBimodule(field, 1, [(0, 0)] * len(block)))
        delta_cols = []
        antipode_cols = []
        for i in block:
            col = {}
            for k, v in self.delta({i: field.one}).items():
                left, right = self.tensor.pairs[k]
                if left in position and right in position:
                    col[inner.pair_index(position[left], position[right])] = v
            delta_cols.append(col)
            antipode_cols.append(restrict(self.s_map({i: field.one})))
        return HopfAlgebroid(
            base,
            total,
            unit_column,
            unit_column,
            counit,
            Matrix.from_sparse_columns(delta_cols, inner.dimension, field),
            Matrix.from_sparse_columns(antipode_cols, len(block), field),
            f"{self.name}[{x}]",
        )

    def replace(self, **maps: Matrix) -> "HopfAlgebroid":
        """返回替换若干结构映射后的副本，用于构造变异样例。"""
        data = {
            "source": self.source,
            "target": self.target,
            "counit": self.counit,
            "comultiplication": self.comultiplication,
            "antipode": self.antipode,
        }
        data.update(maps)
        return HopfAlgebroid(self.base, self.total, name=self.name, **data)

    def to_dict(self) -> Dict[str, Any]:
        """
        导出 Hopf 代数胚，结构映射写成标量字符串矩阵。

        Returns:
            可以被 from_dict 原样读回的字典
        """
        names = self.total.basis_names
        return {
            "name": self.name,
            "field": str(self.field),
            "base": self.base.to_dict(),
            "total": self.total.to_dict(),
            "tensor_basis": [[names[i], names[j]] for i, j in self.tensor.pairs],
            "source": self.source.to_strings(),
            "target": self.target.to_strings(),
            "counit": self.counit.to_strings(),
            "comultiplication": self.comultiplication.to_strings(),
            "antipode": self.antipode.to_strings(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "HopfAlgebroid":
        """
        从字典读取 Hopf 代数胚。

        Raises:
            MalformedInputError: 结构错误
        """
        try:
            field = FieldSpec.parse(data["field"])
            base = SplitAlgebra.from_dict(data["base"], field)
            total_data = data["total"]
            total = SplitAlgebra.from_dict(total_data, field) if total_data.get("delta_basis") else CommutativeAlgebra.from_dict(total_data, field)
            n, m = base.dimension, total.dimension

            def load(key: str, cols: int) -> Matrix:
                return Matrix.from_strings(data[key], field, n_cols=cols)

            h = cls(
                base,
                total,
                load("source", n),
                load("target", n),
                load("counit", m),
                load("comultiplication", m),
                load("antipode", m),
                data.get("name", ""),
            )
        except (KeyError, TypeError) as e:
            raise MalformedInputError(f"Hopf 代数胚文件结构错误: {e!r}")
        if h.comultiplication.rows != h.tensor.dimension:
            raise MalformedInputError(f"comultiplication 的行数为 {h.comultiplication.rows}，期望 {h.tensor.dimension}")
        return h

    def get_summary(self) -> str:
        return (
            f"Hopf 代数胚: {self.name or '(未命名)'}\n"
            f"基域: {self.field}\n"
            f"底代数维数: {self.base_dimension}，总代数维数: {self.dimension}\n"
            f"H ⊗_R H 维数: {self.tensor.dimension}"
        )

    def __repr__(self) -> str:
        return f"HopfAlgebroid({self.name!r}, base={self.base_dimension}, total={self.dimension})"


class HopfMorphism:
    """Hopf 代数胚态射 (α₀, α₁): (R, H) → (R', H')。"""

    def __init__(self, source: HopfAlgebroid, target: HopfAlgebroid, base_map: Matrix, total_map: Matrix):
        if base_map.shape != (target.base_dimension, source.base_dimension):
            raise MalformedInputError(f"α₀ 的形状为 {base_map.shape}")
        if total_map.shape != (target.dimension, source.dimension):
            raise MalformedInputError(f"α₁ 的形状为 {total_map.shape}")
        self.source = source
        self.target = target
        self.base_map = base_map
        self.total_map = total_map

    @classmethod
    def identity(cls, h: HopfAlgebroid) -> "HopfMorphism":
        return cls(h, h, Matrix.identity(h.base_dimension, h.field), Matrix.identity(h.dimension, h.field))

    def compose(self, other: "HopfMorphism") -> "HopfMorphism":
        """self∘other（先 other 后 self）。"""
        return HopfMorphism(other.source, self.target, self.base_map @ other.base_map, self.total_map @ other.total_map)

    def same_maps(self, other: "HopfMorphism") -> bool:
        return self.base_map == other.base_map and self.total_map == other.total_map

    def is_identity(self) -> bool:
        return self.base_map.is_identity() and self.total_map.is_identity()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "base_map": self.base_map.to_strings(),
            "total_map": self.total_map.to_strings(),
        }

    def __repr__(self) -> str:
        return f"HopfMorphism({self.source.name!r} -> {self.target.name!r})"


class Comodule:
    """
    自由 R 模 P = R^d 上的右余模，余作用 p_j ↦ Σᵢ pᵢ ⊗ h_ij。

    coaction[i][j] 是 h_ij 在 H 基下的稀疏坐标。
    """

    def __init__(self, hopf: HopfAlgebroid, rank: int, coaction: Sequence[Sequence[SparseVector]], name: str = ""):
        if len(coaction) != rank or any(len(row) != rank for row in coaction):
            raise MalformedInputError(f"余作用矩阵必须是 {rank}×{rank}")
        self.hopf = hopf
        self.rank = rank
        self.coaction = [[dict(v) for v in row] for row in coaction]
        self.name = name

    @classmethod
    def trivial(cls, hopf: HopfAlgebroid) -> "Comodule":
        """R 自身，余作用由类群元 1_H 给出。"""
        return cls(hopf, 1, [[dict(hopf.total.unit)]], "R")

    def with_entry(self, i: int, j: int, value: SparseVector) -> "Comodule":
        coaction = [list(row) for row in self.coaction]
        coaction[i][j] = dict(value)
        return Comodule(self.hopf, self.rank, coaction, self.name)

    def to_dict(self) -> Dict[str, Any]:
        names = self.hopf.total.basis_names
        return {
            "name": self.name,
            "rank": self.rank,
            "coaction": [[_vector_to_dict(v, names, self.hopf.field) for v in row] for row in self.coaction],
        }

    def __repr__(self) -> str:
        return f"Comodule({self.name!r}, rank={self.rank})"


class CharacterGroupoid:
    """
    特征标群胚 𝒳ₖ(R, H)：对象为 R 的特征标，箭头为 H 的特征标。

    特征标以它在基元素上的取值列表保存。
    """

    def __init__(self, hopf: HopfAlgebroid, groupoid: FiniteGroupoid, object_chars: List[List[Any]], arrow_chars: List[List[Any]]):
        self.hopf = hopf
        self.groupoid = groupoid
        self.object_chars = object_chars
        self.arrow_chars = arrow_chars
        field = hopf.field
        self._object_keys = {tuple(field.key(v) for v in c): k for k, c in enumerate(object_chars)}
        self._arrow_keys = {tuple(field.key(v) for v in c): k for k, c in enumerate(arrow_chars)}

    def object_of(self, values: Sequence[Any]) -> Optional[int]:
        return self._object_keys.get(tuple(self.hopf.field.key(v) for v in values))

    def arrow_of(self, values: Sequence[Any]) -> Optional[int]:
        return self._arrow_keys.get(tuple(self.hopf.field.key(v) for v in values))

    def evaluate(self, k: int, h: SparseVector) -> Any:
        """第 k 个箭头特征标在 h 上的值。"""
        chi = self.arrow_chars[k]
        total = self.hopf.field.zero
        for i, v in h.items():
            total = total + chi[i] * v
        return total

    def __repr__(self) -> str:
        return f"CharacterGroupoid(objects={self.groupoid.n_objects}, arrows={self.groupoid.n_arrows})"
