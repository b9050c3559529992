"""
代表函数的余端模型。

生成族 L 中每个表示 E 贡献 Γ(E)* ⊗_k Γ(E)，记 [E; y,i; x,j] 为
“在 y 处取第 i 个分量”的泛函与“在 x 处为第 j 个基向量”的截面之积。
关系子空间 J 由全部缠绕算子 α: X → Y 给出的 φ⊗αs − φα⊗s 张成：

    Σ_m (α_x)_mj [Y; y,i; x,m] − Σ_l (α_y)_il [X; y,l; x,j]

它们都落在同一个 (y, x) 块内，所以按块做行化简，商空间的基取非主元坐标。
坐标按族的逆序排列，使商空间的基尽量落在 𝓘 和最初给出的表示上。
"""

import random
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.algebra.linalg import accumulate, inverse, rank, rref, solve_linear
from groupoid_duality.algebra.matrix import Matrix, SparseVector
from groupoid_duality.errors import MalformedInputError, SingularMatrixError
from groupoid_duality.log import get_logger
from groupoid_duality.models.groupoid import FiniteGroupoid
from groupoid_duality.models.hopf import CommutativeAlgebra, GradedBimodule, HopfAlgebroid, SplitAlgebra, TensorProduct
from groupoid_duality.models.report import CheckReport
from groupoid_duality.models.representation import RepMorphism, Representation
from groupoid_duality.tools.representation_tools import (
    dual_rep,
    intertwiner_space,
    spanning_family,
    tensor_rep,
    trivial_rep,
)

logger = get_logger(__name__)

Block = Tuple[int, int]
# (表示编号, y, i, x, j)
Label = Tuple[int, int, int, int, int]


def _find(reps: Sequence[Representation], r: Representation) -> Optional[int]:
    for k, s in enumerate(reps):
        if r.same_matrices(s):
            return k
    return None


def closure_family(
    g: FiniteGroupoid,
    family: Sequence[Representation],
    field: FieldSpec,
    depth: int = 2,
    max_rank: int = 16,
) -> Tuple[List[Representation], List[Tuple[str, str]]]:
    """
    把生成族补全为 𝓘、原族、对偶以及不超过 depth 个因子的张量积，按矩阵去重。

    秩超过 max_rank 的张量积不加入族，余端模型在用到它们时经缠绕算子
    把它们的矩阵系数写回族中（见 CoendModel.tensor_coords）。

    Args:
        g: 群胚
        family: 初始表示族
        field: 基域
        depth: 张量积的最多因子数
        max_rank: 加入族的张量积的最大秩

    Returns:
        (补全后的族，𝓘 总在第 0 位；未加入族的乘积名称对)
    """
    if depth < 1:
        raise MalformedInputError(f"张量闭包深度至少为 1，得到 {depth}")
    result: List[Representation] = []
    for r in [trivial_rep(g, field)] + list(family) + [dual_rep(e) for e in family]:
        if r.groupoid != g:
            raise MalformedInputError(f"表示 {r.name} 不在群胚 {g.name} 上")
        if _find(result, r) is None:
            result.append(r)
    level = list(result)
    frontier = list(result)
    oversized: List[Tuple[str, str]] = []
    for _ in range(depth - 1):
        new: List[Representation] = []
        for e in frontier:
            for f in level:
                if e.rank * f.rank > max_rank:
                    oversized.append((e.name, f.name))
                    continue
                t = tensor_rep(e, f)
                if _find(result, t) is None and _find(new, t) is None:
                    new.append(t)
        result.extend(new)
        frontier = new
    if oversized:
        logger.info("%d 个秩超过 %d 的乘积不加入族，改由缠绕算子嵌入计算", len(oversized), max_rank)
    return result, oversized


class _Embedding:
    """
    不在族中的表示 W 经缠绕算子 α: W → F_c 写回族的数据。

    在每个对象 y 上把 e_i* 写成 Σ c·(e_m* ∘ α_y)，于是由余端关系
    [W; y,i; x,j] = Σ c·Σ_l (α_x)_lj [F_c; y,m; x,l]。
    """

    def __init__(
        self,
        maps: List[Tuple[int, RepMorphism]],
        functionals: List[Tuple[int, int]],
        solutions: List[List[SparseVector]],
    ):
        self.maps = maps
        self.functionals = functionals
        self.solutions = solutions


class CoendModel:
    """有限生成族上的余端商空间，带乘法表、单位和结构映射的代表元公式。"""

    def __init__(self, groupoid: FiniteGroupoid, field: FieldSpec, family: Sequence[Representation], closure_embedded: Sequence[Tuple[str, str]] = ()):
        """
        初始化余端模型并计算每个块的关系与商空间的基。

        Args:
            groupoid: 群胚
            field: 基域
            family: 已补全的表示族，第 0 个必须是 𝓘
            closure_embedded: 补全时因秩超限未加入族的乘积
        """
        self.groupoid = groupoid
        self.field = field
        self.family = list(family)
        self.closure_embedded = list(closure_embedded)
        self.order = list(reversed(range(len(self.family))))
        self.coords: List[Tuple[int, int, int]] = [
            (e, i, j) for e in self.order for i in range(self.family[e].rank) for j in range(self.family[e].rank)
        ]
        self.coord_index = {c: k for k, c in enumerate(self.coords)}
        self.duals = [_find(self.family, dual_rep(e)) for e in self.family]
        self.products = self._product_table()
        self._embeddings: Dict[Tuple[int, int], Optional[_Embedding]] = {}
        self._expanded: Dict[Tuple[int, ...], SparseVector] = {}

        self.relation_counts: Dict[Block, int] = {}
        self.reduced: Dict[Block, Tuple[List[SparseVector], List[int]]] = {}
        self.basis: List[Label] = []
        self.free_index: Dict[Block, Dict[int, int]] = {}
        homs = {
            (a, b): intertwiner_space(self.family[a], self.family[b])
            for a in range(len(self.family))
            for b in range(len(self.family))
        }
        for y in groupoid.objects:
            for x in groupoid.objects:
                self._quotient_block(y, x, homs)
        logger.debug(
            "%s 的余端模型: 族大小 %d，环境维数 %d，商维数 %d",
            groupoid.name, len(self.family), self.ambient_dimension, self.dimension,
        )

    def _product_table(self) -> Dict[Tuple[int, int], Optional[int]]:
        ranks = {r.rank for r in self.family}
        table: Dict[Tuple[int, int], Optional[int]] = {}
        for a, e in enumerate(self.family):
            for b, f in enumerate(self.family):
                if e.rank * f.rank not in ranks:
                    table[(a, b)] = None
                    continue
                table[(a, b)] = _find(self.family, tensor_rep(e, f))
        return table

    def _embed(self, w: Representation) -> Optional[_Embedding]:
        field = self.field
        maps = [(c, alpha) for c, target in enumerate(self.family) for alpha in intertwiner_space(w, target)]
        functionals = [(k, m) for k, (c, _) in enumerate(maps) for m in range(self.family[c].rank)]
        solutions: List[List[SparseVector]] = []
        for y in self.groupoid.objects:
            rows = [maps[k][1].components[y].sparse_rows[m] for k, m in functionals]
            coefficients = solve_linear(Matrix.from_sparse_columns(rows, w.rank, field), Matrix.identity(w.rank, field))
            if coefficients is None:
                logger.warning("%s 在对象 %d 上不能经缠绕算子嵌入族中", w.name, y)
                return None
            solutions.append(coefficients.sparse_columns)
        return _Embedding(maps, functionals, solutions)

    def embedding(self, e: int, f: int) -> Optional[_Embedding]:
        """族中第 e、f 个表示的张量积写回族的数据；无法写回时为 None。"""
        key = (e, f)
        if key not in self._embeddings:
            self._embeddings[key] = self._embed(tensor_rep(self.family[e], self.family[f]))
        return self._embeddings[key]

    def tensor_coords(self, e: int, f: int, y: int, i: int, x: int, j: int) -> Optional[SparseVector]:
        """
        [E⊗F; y,i; x,j] 在 (y, x) 块环境坐标中的代表元。

        张量积在族中时直接取它的坐标，否则经 embedding 展开。

        Returns:
            稀疏向量；张量积无法写回族时为 None
        """
        p = self.products[(e, f)]
        if p is not None:
            return {self.coord_index[(p, i, j)]: self.field.one}
        key = (e, f, y, i, x, j)
        if key in self._expanded:
            return self._expanded[key]
        embedding = self.embedding(e, f)
        if embedding is None:
            return None
        result: SparseVector = {}
        for r, c in embedding.solutions[y][i].items():
            k, m = embedding.functionals[r]
            target, alpha = embedding.maps[k]
            for l, v in alpha.components[x].sparse_columns[j].items():
                accumulate(result, {self.coord_index[(target, m, l)]: c * v})
        self._expanded[key] = result
        return result

    def _quotient_block(self, y: int, x: int, homs: Dict[Tuple[int, int], list]) -> None:
        field = self.field
        rows: List[SparseVector] = []
        for (a, b), alphas in homs.items():
            dx, dy = self.family[a].rank, self.family[b].rank
            for alpha in alphas:
                at_x = alpha.components[x].sparse_columns
                at_y = alpha.components[y].sparse_rows
                for i in range(dy):
                    for j in range(dx):
                        row: SparseVector = {}
                        for m, v in at_x[j].items():
                            accumulate(row, {self.coord_index[(b, i, m)]: v})
                        for l, v in at_y[i].items():
                            accumulate(row, {self.coord_index[(a, l, j)]: -v})
                        if row:
                            rows.append(row)
        self.relation_counts[(y, x)] = len(rows)
        n = len(self.coords)
        if rows:
            reduced, r, pivots = rref(Matrix.from_sparse_rows(rows, n, field))
            kept = [dict(row) for row in reduced.sparse_rows[:r]]
        else:
            kept, pivots = [], []
        self.reduced[(y, x)] = (kept, pivots)
        pivot_set = set(pivots)
        free = {}
        for c in range(n):
            if c not in pivot_set:
                e, i, j = self.coords[c]
                free[c] = len(self.basis)
                self.basis.append((e, y, i, x, j))
        self.free_index[(y, x)] = free

    # ---- 基本量 ----

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def ambient_dimension(self) -> int:
        return len(self.coords) * self.groupoid.n_objects ** 2

    @cached_property
    def basis_by_block(self) -> Dict[Block, List[int]]:
        table: Dict[Block, List[int]] = {}
        for k, (_, y, _, x, _) in enumerate(self.basis):
            table.setdefault((y, x), []).append(k)
        return table

    @property
    def skipped_products(self) -> List[Tuple[int, int]]:
        """既不在族中、也无法经缠绕算子写回族的张量积。"""
        return sorted(pair for pair, p in self.products.items() if p is None and self.embedding(*pair) is None)

    @property
    def embedded_products(self) -> List[Tuple[int, int]]:
        return sorted(pair for pair, p in self.products.items() if p is None and self.embedding(*pair) is not None)

    @property
    def is_product_complete(self) -> bool:
        return not self.skipped_products

    def reduce(self, y: int, x: int, vector: SparseVector) -> SparseVector:
        """(y, x) 块中的环境向量在商空间中的坐标。"""
        v = dict(vector)
        rows, pivots = self.reduced[(y, x)]
        for row, p in zip(rows, pivots):
            c = v.get(p)
            if c:
                accumulate(v, row, -c)
        free = self.free_index[(y, x)]
        return {free[c]: value for c, value in v.items()}

    def class_of(self, e: int, y: int, i: int, x: int, j: int) -> SparseVector:
        return self.reduce(y, x, {self.coord_index[(e, i, j)]: self.field.one})

    # ---- 代数结构 ----

    def multiply_basis(self, k: int, l: int) -> Optional[SparseVector]:
        """基元素之积；所需的张量积无法写回族时返回 None。"""
        e, y, i, x, j = self.basis[k]
        f, y2, i2, x2, j2 = self.basis[l]
        if (y, x) != (y2, x2):
            return {}
        df = self.family[f].rank
        coords = self.tensor_coords(e, f, y, i * df + i2, x, j * df + j2)
        if coords is None:
            return None
        return self.reduce(y, x, coords)

    def multiply(self, u: SparseVector, v: SparseVector) -> Optional[SparseVector]:
        result: SparseVector = {}
        for k, a in u.items():
            for l, b in v.items():
                product = self.multiply_basis(k, l)
                if product is None:
                    return None
                accumulate(result, product, a * b)
        return result

    @cached_property
    def unit(self) -> SparseVector:
        """Σ_{y,x} [𝓘; y,0; x,0] 的类。"""
        result: SparseVector = {}
        for y in self.groupoid.objects:
            for x in self.groupoid.objects:
                accumulate(result, self.class_of(0, y, 0, x, 0))
        return result

    def source(self, x: int) -> SparseVector:
        """η_s(e_x) = Σ_y [𝓘; y,0; x,0]。"""
        result: SparseVector = {}
        for y in self.groupoid.objects:
            accumulate(result, self.class_of(0, y, 0, x, 0))
        return result

    def target(self, y: int) -> SparseVector:
        """η_t(e_y) = Σ_x [𝓘; y,0; x,0]。"""
        result: SparseVector = {}
        for x in self.groupoid.objects:
            accumulate(result, self.class_of(0, y, 0, x, 0))
        return result

    @cached_property
    def counit_matrix(self) -> Matrix:
        """ε[E; y,i; x,j] = δ_yx δ_ij e_x。"""
        columns = [{x: self.field.one} if y == x and i == j else {} for (_, y, i, x, j) in self.basis]
        return Matrix.from_sparse_columns(columns, self.groupoid.n_objects, self.field)

    @cached_property
    def antipode_matrix(self) -> Matrix:
        """S[E; y,i; x,j] = [E*; x,j; y,i]。"""
        columns = []
        for (e, y, i, x, j) in self.basis:
            dual = self.duals[e]
            if dual is None:
                raise MalformedInputError(f"族中缺少 {self.family[e].name} 的对偶")
            columns.append(self.class_of(dual, x, j, y, i))
        return Matrix.from_sparse_columns(columns, self.dimension, self.field)

    def comultiplication_terms(self, k: int) -> List[Tuple[Label, Label]]:
        """Δ[E; y,i; x,j] = Σ_{z,m} [E; y,i; z,m] ⊗ [E; z,m; x,j] 的代表元。"""
        e, y, i, x, j = self.basis[k]
        return [
            ((e, y, i, z, m), (e, z, m, x, j))
            for z in self.groupoid.objects
            for m in range(self.family[e].rank)
        ]

    # ---- ζ ----

    def ambient_zeta(self, label: Label) -> SparseVector:
        """ζ[E; y,i; x,j](g) = [t g = y][s g = x](ϱ_g)_ij。"""
        e, y, i, x, j = label
        rep = self.family[e]
        return {a: rep.matrices[a].value(i, j) for a in self.groupoid.hom(x, y) if rep.matrices[a].value(i, j)}

    @cached_property
    def zeta_matrix(self) -> Matrix:
        return Matrix.from_sparse_columns([self.ambient_zeta(label) for label in self.basis], self.groupoid.n_arrows, self.field)

    @cached_property
    def zeta_coproduct_matrix(self) -> Matrix:
        """行为可复合对 (g, f)，值为 Σ_m (ϱ_g)_im (ϱ_f)_mj，即代表元公式下的 (ζ⊗ζ)∘Δ。"""
        g = self.groupoid
        field = self.field
        rows = []
        for (a, b) in g.composable_pairs:
            row: SparseVector = {}
            for k, (e, y, i, x, j) in enumerate(self.basis):
                if g.tgt[a] != y or g.src[b] != x:
                    continue
                left = self.family[e].matrices[a].sparse_rows[i]
                right = self.family[e].matrices[b].sparse_columns[j]
                total = field.zero
                for m, v in left.items():
                    w = right.get(m)
                    if w is not None:
                        total = total + v * w
                if total:
                    row[k] = total
            rows.append(row)
        return Matrix.from_sparse_rows(rows, self.dimension, field)

    def to_dict(self) -> Dict[str, Any]:
        names = self.groupoid.object_names
        return {
            "groupoid": self.groupoid.name,
            "field": str(self.field),
            "family": [{"name": r.name, "rank": r.rank} for r in self.family],
            "ambient_dimension": self.ambient_dimension,
            "dimension": self.dimension,
            "relations": {f"{names[y]},{names[x]}": n for (y, x), n in sorted(self.relation_counts.items())},
            "skipped_products": [[self.family[a].name, self.family[b].name] for a, b in self.skipped_products],
            "embedded_products": [[self.family[a].name, self.family[b].name] for a, b in self.embedded_products],
            "closure_embedded": [list(p) for p in self.closure_embedded],
            "basis": [f"[{self.family[e].name};{names[y]},{i};{names[x]},{j}]" for (e, y, i, x, j) in self.basis],
        }

    def get_summary(self) -> str:
        return (
            f"余端模型: {self.groupoid.name}\n"
            f"族: {', '.join(f'{r.name}(秩 {r.rank})' for r in self.family)}\n"
            f"环境维数: {self.ambient_dimension}，商维数: {self.dimension}\n"
            f"缺失的乘积: {len(self.skipped_products)}"
        )

    def __repr__(self) -> str:
        return f"CoendModel({self.groupoid.name!r}, dim={self.dimension})"


def coend_from_family(
    g: FiniteGroupoid,
    family: Sequence[Representation],
    depth: int = 2,
    max_rank: int = 16,
    field: Optional[FieldSpec] = None,
) -> CoendModel:
    """
    由表示族构造余端模型：先补全族，再对全部缠绕算子取商。

    Args:
        g: 群胚
        family: 表示族（可以为空，𝓘 总会被加入）
        depth: 张量闭包深度
        max_rank: 加入族的张量积的最大秩
        field: 基域，family 为空时必须给出

    Returns:
        余端模型
    """
    if field is None:
        if not family:
            raise MalformedInputError("表示族为空时必须给出基域")
        field = family[0].field
    for r in family:
        field.check_same(r.field)
    closed, oversized = closure_family(g, family, field, depth, max_rank)
    return CoendModel(g, field, closed, oversized)


def spanning_coend(g: FiniteGroupoid, field: FieldSpec, depth: int = 2, max_rank: int = 16) -> CoendModel:
    """生成族上的余端模型。"""
    return coend_from_family(g, spanning_family(g, field), depth, max_rank, field)


def _check_well_defined(model: CoendModel, report: CheckReport) -> None:
    """关系乘以任意基元素仍落在关系子空间中。"""
    checked = skipped = 0
    failure = None
    for (y, x), (rows, _) in model.reduced.items():
        for k in model.basis_by_block.get((y, x), []):
            f, _, i2, _, j2 = model.basis[k]
            df = model.family[f].rank
            for row in rows:
                product: SparseVector = {}
                complete = True
                for c, v in row.items():
                    e, i, j = model.coords[c]
                    coords = model.tensor_coords(e, f, y, i * df + i2, x, j * df + j2)
                    if coords is None:
                        complete = False
                        break
                    accumulate(product, coords, v)
                if not complete:
                    skipped += 1
                    continue
                checked += 1
                if failure is None and model.reduce(y, x, product):
                    failure = (y, x, k)
    report.details["well_defined_checked"] = checked
    report.details["well_defined_skipped"] = skipped
    if failure is not None:
        report.add("multiplication_well_defined", failure, "关系与基元素之积不在关系子空间中")
    if skipped:
        report.add("multiplication_well_defined", (skipped,), "有关系与基元素之积无法写回族，未能检查")


def zeta(model: CoendModel, seed: int = 0, samples: int = 100) -> Tuple[Matrix, CheckReport]:
    """
    ζ: 余端 → k^{𝒢₁} 及其性质报告。

    检查乘法性、保单位、B⊗B 线性，以及
    (1) ι*∘ζ = ε，(2) ζ∘S = ζ 与取逆预复合，(3) ζ(F)(g∘f) = Σ ζ(F₁)(g)ζ(F₂)(f)，
    先在商空间的全部基上，再在 samples 个随机线性组合上。

    Args:
        model: 余端模型
        seed: 随机种子
        samples: 随机元素个数

    Returns:
        (ζ 的矩阵，报告)；报告的 details 含核维数与像维数
    """
    g = model.groupoid
    field = model.field
    one = field.one
    z = model.zeta_matrix
    report = CheckReport(f"zeta {g.name}".strip())

    if z.apply(model.unit) != {a: one for a in g.arrows}:
        report.add("zeta_unital", None, "ζ(1) 不是常值函数 1")

    skipped = 0
    columns = z.sparse_columns
    for block, members in sorted(model.basis_by_block.items()):
        for a, k in enumerate(members):
            for l in members[a:]:
                product = model.multiply_basis(k, l)
                if product is None:
                    skipped += 1
                    continue
                expected = {c: v * columns[l][c] for c, v in columns[k].items() if c in columns[l]}
                if z.apply(product) != expected:
                    report.add("zeta_multiplicative", (k, l))
                    break
    report.details["products_skipped"] = skipped
    report.details["products_embedded"] = len(model.embedded_products)
    if skipped:
        report.add("zeta_multiplicative", (skipped,), "有基元素之积无法写回族，乘法性未能检查")

    for x in g.objects:
        if z.apply(model.source(x)) != {a: one for a in g.arrows if g.src[a] == x}:
            report.add("zeta_bilinear", ("source", x), "ζ∘η_s ≠ s 预复合")
        if z.apply(model.target(x)) != {a: one for a in g.arrows if g.tgt[a] == x}:
            report.add("zeta_bilinear", ("target", x), "ζ∘η_t ≠ t 预复合")
    for k, (_, y, _, x, _) in enumerate(model.basis):
        hom = set(g.hom(x, y))
        if any(a not in hom for a in columns[k]):
            report.add("zeta_bilinear", (k,), "ζ 不保持 (t, s) 分次")
            break

    restrict_units = Matrix.from_sparse_rows([{g.identity[x]: one} for x in g.objects], g.n_arrows, field)
    invert = Matrix.from_sparse_rows([{g.inverse[a]: one} for a in g.arrows], g.n_arrows, field)
    compose = Matrix.from_sparse_rows([{g.compose(a, b): one} for a, b in g.composable_pairs], g.n_arrows, field)
    counit = model.counit_matrix
    antipode = model.antipode_matrix
    coproduct = model.zeta_coproduct_matrix
    identities = [
        ("zeta_counit", restrict_units @ z, counit),
        ("zeta_antipode", z @ antipode, invert @ z),
        ("zeta_comultiplication", compose @ z, coproduct),
    ]
    for axiom, left, right in identities:
        for k in range(model.dimension):
            if left.sparse_columns[k] != right.sparse_columns[k]:
                report.add(axiom, (k,), "基元素上不成立")
                break

    rng = random.Random(seed)
    for s in range(samples):
        v = {k: c for k in range(model.dimension) if (c := field.random_element(rng))}
        for axiom, left, right in identities:
            if left.apply(v) != right.apply(v):
                report.add(axiom, ("sample", s), "随机元素上不成立")
                break

    _check_well_defined(model, report)

    r = rank(z)
    report.details.update({
        "dimension": model.dimension,
        "ambient_dimension": model.ambient_dimension,
        "image_dimension": r,
        "kernel_dimension": model.dimension - r,
        "arrows": g.n_arrows,
        "samples": samples,
        "seed": seed,
    })
    if r != model.dimension:
        report.add("zeta_injective", (model.dimension - r,), "ζ 的核非零")
    return z, report


def compare_with_concrete(model: CoendModel, concrete: HopfAlgebroid) -> CheckReport:
    """
    经 ζ 比较余端模型与具体模型的结构映射。

    Returns:
        公理名为 source、target、unit、counit、antipode、comultiplication、bijective 的报告
    """
    g = model.groupoid
    z = model.zeta_matrix
    report = CheckReport(f"coend vs concrete {g.name}".strip())
    for x in g.objects:
        if z.apply(model.source(x)) != concrete.eta_s({x: model.field.one}):
            report.add("source", (x,))
        if z.apply(model.target(x)) != concrete.eta_t({x: model.field.one}):
            report.add("target", (x,))
    if z.apply(model.unit) != concrete.total.unit:
        report.add("unit", None)
    if concrete.counit @ z != model.counit_matrix:
        report.add("counit", None, "ε∘ζ ≠ ε")
    if concrete.antipode @ z != z @ model.antipode_matrix:
        report.add("antipode", None, "S∘ζ ≠ ζ∘S")
    if concrete.comultiplication @ z != model.zeta_coproduct_matrix:
        report.add("comultiplication", None, "Δ∘ζ ≠ (ζ⊗ζ)∘Δ")
    r = rank(z)
    report.details = {"coend_dimension": model.dimension, "concrete_dimension": concrete.dimension, "rank": r}
    if not (r == model.dimension == concrete.dimension):
        report.add("bijective", (r, model.dimension, concrete.dimension))
    return report


def coend_hopf_algebroid(model: CoendModel) -> HopfAlgebroid:
    """
    把余端模型整理成 Hopf 代数胚，族外的张量积经缠绕算子写回族中。

    ζ 可逆时，ζ⁻¹ 的列（δ_g 的原像）作为分裂见证。

    Raises:
        MalformedInputError: 有张量积无法写回族
    """
    if not model.is_product_complete:
        raise MalformedInputError(f"有 {len(model.skipped_products)} 个张量积无法写回族")
    g = model.groupoid
    field = model.field
    q = model.dimension
    products = {}
    for members in model.basis_by_block.values():
        for a, k in enumerate(members):
            for l in members[a:]:
                products[(k, l)] = model.multiply_basis(k, l)
    names = model.to_dict()["basis"]
    try:
        witness = inverse(model.zeta_matrix) if model.zeta_matrix.shape == (q, q) else None
    except SingularMatrixError:
        witness = None
    total = CommutativeAlgebra(field, names, products, model.unit, witness, f"coend({g.name})")
    base = SplitAlgebra(field, g.object_names, f"B({g.name})")

    graded = GradedBimodule(field, g.n_objects, [(y, x) for (_, y, _, x, _) in model.basis])
    tensor = TensorProduct(graded, graded)
    delta_columns = []
    for k in range(q):
        column: SparseVector = {}
        for left, right in model.comultiplication_terms(k):
            u = model.class_of(*left)
            v = model.class_of(*right)
            for p, a in u.items():
                for r, b in v.items():
                    idx = tensor.pair_index(p, r)
                    if idx is not None:
                        accumulate(column, {idx: a * b})
        delta_columns.append(column)

    return HopfAlgebroid(
        base,
        total,
        Matrix.from_sparse_columns([model.source(x) for x in g.objects], q, field),
        Matrix.from_sparse_columns([model.target(y) for y in g.objects], q, field),
        model.counit_matrix,
        Matrix.from_sparse_columns(delta_columns, tensor.dimension, field),
        model.antipode_matrix,
        f"coend({g.name})",
    )
