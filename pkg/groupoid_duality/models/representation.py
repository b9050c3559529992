"""
表示数据模型模块，定义群胚表示、表示之间的态射和整体截面模。

表示总是以平凡化的形式保存：每个对象上的纤维都是 kᵈ，只记录每个箭头的矩阵 ϱ_g。
"""

from typing import Any, Callable, Dict, List, Optional, Sequence

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.algebra.linalg import rank
from groupoid_duality.algebra.matrix import Matrix, SparseVector
from groupoid_duality.errors import MalformedInputError, RankMismatchError
from groupoid_duality.models.groupoid import FiniteGroupoid


class Representation:
    """群胚的有限维表示。"""

    def __init__(self, groupoid: FiniteGroupoid, field: FieldSpec, rank: int, matrices: Sequence[Matrix], name: str = ""):
        """
        初始化表示。

        Args:
            groupoid: 所在的群胚
            field: 基域
            rank: 纤维维数 d（允许为 0）
            matrices: 按箭头编号排列的 d×d 矩阵
            name: 表示名称

        Raises:
            MalformedInputError: 矩阵个数与箭头数不一致
            RankMismatchError: 某个矩阵不是 d×d
        """
        if len(matrices) != groupoid.n_arrows:
            raise MalformedInputError(f"需要 {groupoid.n_arrows} 个矩阵，得到 {len(matrices)} 个")
        bad = {a: m.shape for a, m in enumerate(matrices) if m.shape != (rank, rank)}
        if bad:
            raise RankMismatchError(f"矩阵形状与秩 {rank} 不一致", bad)
        for m in matrices:
            field.check_same(m.field)
        self.groupoid = groupoid
        self.field = field
        self.rank = rank
        self.matrices = list(matrices)
        self.name = name

    def matrix(self, a: int) -> Matrix:
        return self.matrices[a]

    def same_matrices(self, other: "Representation") -> bool:
        return self.rank == other.rank and self.matrices == other.matrices

    def with_matrix(self, a: int, m: Matrix) -> "Representation":
        """替换一个箭头上的矩阵，用于构造变异样例。"""
        matrices = list(self.matrices)
        matrices[a] = m
        return Representation(self.groupoid, self.field, self.rank, matrices, self.name)

    def to_dict(self, groupoid_ref: Any = None) -> Dict[str, Any]:
        """
        将表示转换为文件格式的字典。

        Args:
            groupoid_ref: 群胚文件路径；为空时内联群胚

        Returns:
            {"groupoid", "field", "rank", "matrices"} 结构
        """
        return {
            "name": self.name,
            "groupoid": groupoid_ref if groupoid_ref is not None else self.groupoid.to_dict(),
            "field": str(self.field),
            "rank": self.rank,
            "matrices": {self.groupoid.arrow_names[a]: m.to_strings() for a, m in enumerate(self.matrices)},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], resolve: Optional[Callable[[str], FiniteGroupoid]] = None) -> "Representation":
        """
        从字典创建表示。

        Args:
            data: 表示字典
            resolve: 群胚字段是路径字符串时用来读取群胚

        Returns:
            创建的表示
        """
        try:
            ref = data["groupoid"]
            if isinstance(ref, dict):
                groupoid = FiniteGroupoid.from_dict(ref)
            elif resolve is not None:
                groupoid = resolve(str(ref))
            else:
                raise MalformedInputError("表示文件引用了群胚文件，但没有提供读取方式")
            field = FieldSpec.parse(data["field"])
            d = int(data["rank"])
            table = data["matrices"]
            missing = [name for name in groupoid.arrow_names if name not in table]
            if missing:
                raise MalformedInputError(f"缺少箭头的矩阵: {missing}")
            matrices = [Matrix.from_strings(table[name], field, n_cols=d) for name in groupoid.arrow_names]
        except (KeyError, TypeError) as e:
            raise MalformedInputError(f"表示文件结构错误: {e!r}")
        return cls(groupoid, field, d, matrices, data.get("name", ""))

    def get_summary(self) -> str:
        return (
            f"表示: {self.name or '(未命名)'}\n"
            f"群胚: {self.groupoid.name}，基域: {self.field}\n"
            f"秩: {self.rank}"
        )

    def __repr__(self) -> str:
        return f"Representation({self.name!r}, rank={self.rank}, field={self.field})"


class RepMorphism:
    """表示之间的态射，每个对象一个 (target.rank × source.rank) 矩阵。"""

    def __init__(self, source: Representation, target: Representation, components: Sequence[Matrix]):
        if source.groupoid != target.groupoid:
            raise MalformedInputError("态射两端的表示不在同一个群胚上")
        source.field.check_same(target.field)
        if len(components) != source.groupoid.n_objects:
            raise MalformedInputError("态射的分量个数必须等于对象数")
        for x, m in enumerate(components):
            if m.shape != (target.rank, source.rank):
                raise MalformedInputError(f"对象 {x} 上的分量形状为 {m.shape}，期望 {(target.rank, source.rank)}")
        self.source = source
        self.target = target
        self.components = list(components)

    @property
    def field(self) -> FieldSpec:
        return self.source.field

    def fiber_ranks(self) -> List[int]:
        return [rank(m) for m in self.components]

    def is_isomorphism(self) -> bool:
        return self.source.rank == self.target.rank and all(r == self.source.rank for r in self.fiber_ranks())

    def compose(self, other: "RepMorphism") -> "RepMorphism":
        """self∘other。"""
        return RepMorphism(other.source, self.target, [a @ b for a, b in zip(self.components, other.components)])

    def to_dict(self) -> Dict[str, Any]:
        names = self.source.groupoid.object_names
        return {names[x]: m.to_strings() for x, m in enumerate(self.components)}

    def __repr__(self) -> str:
        return f"RepMorphism({self.source.rank} -> {self.target.rank})"


class SectionsModule:
    """
    整体截面模 Γ(E)：底代数 B = k^{𝒢₀} 上秩为 d 的自由模。

    作为 k 向量空间，截面 s 的坐标按 (x, i) ↦ x·d + i 排列，
    即 s(x) 的第 i 个分量。对偶基 {sᵢ, sᵢ*} 是常值截面 sᵢ(x) = uᵢ 与取第 i 个分量。
    """

    def __init__(self, representation: Representation):
        self.representation = representation
        self.field = representation.field
        self.rank = representation.rank
        self.n_objects = representation.groupoid.n_objects

    @property
    def dimension(self) -> int:
        """作为 k 向量空间的维数 n·d。"""
        return self.n_objects * self.rank

    def coordinate(self, x: int, i: int) -> int:
        return x * self.rank + i

    def basis_section(self, i: int) -> SparseVector:
        """常值截面 sᵢ。"""
        return {self.coordinate(x, i): self.field.one for x in range(self.n_objects)}

    def dual_basis(self, i: int, s: SparseVector) -> SparseVector:
        """sᵢ*(s) ∈ B，以对象为坐标。"""
        return {x: s[self.coordinate(x, i)] for x in range(self.n_objects) if self.coordinate(x, i) in s}

    def act(self, b: SparseVector, s: SparseVector) -> SparseVector:
        """底代数元素 b 逐点作用在截面上。"""
        result = {}
        for c, v in s.items():
            value = b.get(c // self.rank, self.field.zero) * v if self.rank else self.field.zero
            if value:
                result[c] = value
        return result

    def reconstruct(self, s: SparseVector) -> SparseVector:
        """按对偶基重构 Σ sᵢ*(s)·sᵢ。"""
        result: SparseVector = {}
        for i in range(self.rank):
            for c, v in self.act(self.dual_basis(i, s), self.basis_section(i)).items():
                result[c] = v
        return result

    def value_at(self, s: SparseVector, x: int) -> List[Any]:
        return [s.get(self.coordinate(x, i), self.field.zero) for i in range(self.rank)]

    def get_summary(self) -> str:
        return f"整体截面模: 秩 {self.rank}，底代数 k^{self.n_objects}，k 维数 {self.dimension}"
