"""
表示工具模块：表示的校验、张量积、对偶、直和、缠绕算子、核与余核、
沿态射的限制、整体截面以及生成族。
"""

from typing import Dict, List, Optional, Sequence, Tuple

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.algebra.linalg import (
    block_diagonal,
    inverse,
    kernel_basis,
    kron,
    rank,
    rank_of_vectors,
    solve_linear,
)
from groupoid_duality.algebra.matrix import Matrix, SparseVector
from groupoid_duality.errors import MalformedInputError, RankMismatchError, SingularMatrixError
from groupoid_duality.log import get_logger
from groupoid_duality.models.groupoid import FiniteGroupoid, GroupoidMorphism
from groupoid_duality.models.report import CheckReport
from groupoid_duality.models.representation import Representation, RepMorphism, SectionsModule
from groupoid_duality.storage.json_storage import JsonStorage
from groupoid_duality.tools.groupoid_tools import (
    canonical_arrows,
    connected_components,
    generating_arrows,
)

logger = get_logger(__name__)


def _check_compatible(e: Representation, f: Representation) -> None:
    if e.groupoid != f.groupoid:
        raise MalformedInputError("两个表示不在同一个群胚上")
    e.field.check_same(f.field)


# ========================
# 构造
# ========================

def trivial_rep(g: FiniteGroupoid, field: FieldSpec, rank: int = 1) -> Representation:
    """单位对象 𝓘（rank > 1 时为 𝓘 的 rank 次直和）。"""
    identity = Matrix.identity(rank, field)
    return Representation(g, field, rank, [identity] * g.n_arrows, "I" if rank == 1 else f"I^{rank}")


def zero_rep(g: FiniteGroupoid, field: FieldSpec) -> Representation:
    return trivial_rep(g, field, 0)


def permutation_matrix(images: Sequence[int], field: FieldSpec) -> Matrix:
    """第 k 列在第 images[k] 行为 1 的置换矩阵。"""
    return Matrix.from_sparse_columns([{images[k]: field.one} for k in range(len(images))], len(images), field)


def regular_rep(group: FiniteGroupoid, field: FieldSpec) -> Representation:
    """有限群（单对象群胚）的左正则表示。"""
    if group.n_objects != 1:
        raise MalformedInputError("regular_rep 只适用于群")
    matrices = [permutation_matrix([group.compose(h, k) for k in group.arrows], field) for h in group.arrows]
    return Representation(group, field, group.n_arrows, matrices, f"Reg({group.name})")


def tensor_rep(e: Representation, f: Representation) -> Representation:
    """张量积 E ⊗ F，矩阵为 Kronecker 积。"""
    _check_compatible(e, f)
    matrices = [kron(a, b) for a, b in zip(e.matrices, f.matrices)]
    return Representation(e.groupoid, e.field, e.rank * f.rank, matrices, f"({e.name}⊗{f.name})")


def dual_rep(e: Representation) -> Representation:
    """对偶表示，矩阵为 ϱ_g 的逆的转置。"""
    matrices = [inverse(m).transpose() for m in e.matrices]
    name = e.name[:-1] if e.name.endswith("*") else f"{e.name}*"
    return Representation(e.groupoid, e.field, e.rank, matrices, name)


def direct_sum(e: Representation, f: Representation) -> Representation:
    _check_compatible(e, f)
    matrices = [block_diagonal([a, b], e.field) for a, b in zip(e.matrices, f.matrices)]
    return Representation(e.groupoid, e.field, e.rank + f.rank, matrices, f"({e.name}⊕{f.name})")


def restrict_along(phi: GroupoidMorphism, r: Representation) -> Representation:
    """沿群胚态射 φ 的限制：g ↦ ϱ_{φ(g)}。"""
    if r.groupoid != phi.codomain:
        raise MalformedInputError("表示不在态射的陪域上")
    matrices = [r.matrices[phi.arrow_map[a]] for a in phi.domain.arrows]
    return Representation(phi.domain, r.field, r.rank, matrices, f"res({r.name})")


# ========================
# 校验
# ========================

def validate_rep(r: Representation) -> CheckReport:
    """
    校验单位律、余环条件和可逆性。

    Args:
        r: 待校验的表示

    Returns:
        校验报告，违反项带有见证箭头
    """
    report = CheckReport(f"representation {r.name}".strip())
    g = r.groupoid
    for x in g.objects:
        if not r.matrices[g.identity[x]].is_identity():
            report.add("identity_law", (x, g.identity[x]))
    for a in g.arrows:
        if rank(r.matrices[a]) != r.rank:
            report.add("invertibility", (a,), "矩阵不可逆")
    for (a, b), ab in sorted(g.compose_table.items()):
        if r.matrices[a] @ r.matrices[b] != r.matrices[ab]:
            report.add("cocycle", (a, b), f"ϱ_{a}·ϱ_{b} ≠ ϱ_{ab}")
    return report


def validate_rep_morphism(m: RepMorphism) -> CheckReport:
    """校验缠绕条件 α_{t(g)}·ϱᴱ_g = ϱᶠ_g·α_{s(g)}。"""
    report = CheckReport("representation morphism")
    g = m.source.groupoid
    for a in g.arrows:
        left = m.components[g.tgt[a]] @ m.source.matrices[a]
        right = m.target.matrices[a] @ m.components[g.src[a]]
        if left != right:
            report.add("intertwining", (a,))
    return report


# ========================
# 缠绕算子、核与余核
# ========================

def intertwiner_space(e: Representation, f: Representation) -> List[RepMorphism]:
    """
    Hom(E, F) 的一组基。

    未知数是所有 α_x 的矩阵元，编号 x·(dF·dE) + i·dE + j。
    缠绕条件在积下封闭，所以只需对生成箭头列方程。

    Returns:
        RepMorphism 列表，顺序由零空间基决定
    """
    _check_compatible(e, f)
    g = e.groupoid
    de, df = e.rank, f.rank
    block = de * df
    n_vars = g.n_objects * block
    if n_vars == 0:
        return []
    field = e.field
    rows: List[SparseVector] = []
    for a in generating_arrows(g):
        s, t = g.src[a], g.tgt[a]
        fa = f.matrices[a].sparse_rows
        ea_cols = e.matrices[a].sparse_columns
        for i in range(df):
            for j in range(de):
                row: SparseVector = {}
                # (α_t·ϱᴱ_a)[i][j] = Σ_k α_t[i][k]·ϱᴱ_a[k][j]
                for k, v in ea_cols[j].items():
                    idx = t * block + i * de + k
                    row[idx] = row.get(idx, field.zero) + v
                # (ϱᶠ_a·α_s)[i][j] = Σ_k ϱᶠ_a[i][k]·α_s[k][j]
                for k, v in fa[i].items():
                    idx = s * block + k * de + j
                    row[idx] = row.get(idx, field.zero) - v
                row = {c: v for c, v in row.items() if v}
                if row:
                    rows.append(row)
    if rows:
        basis = kernel_basis(Matrix.from_sparse_rows(rows, n_vars, field))
    else:
        basis = Matrix.identity(n_vars, field)
    result = []
    for col in basis.sparse_columns:
        components = []
        for x in g.objects:
            values = [[col.get(x * block + i * de + j, field.zero) for j in range(de)] for i in range(df)]
            components.append(Matrix(values, field, df, de))
        result.append(RepMorphism(e, f, components))
    logger.debug("Hom(%s, %s) 维数 %d", e.name, f.name, len(result))
    return result


def _check_constant_rank(m: RepMorphism) -> int:
    ranks = m.fiber_ranks()
    if len(set(ranks)) > 1:
        raise RankMismatchError("各对象上的纤维秩不相同，核与余核不满足常秩条件", {x: r for x, r in enumerate(ranks)})
    return ranks[0] if ranks else 0


def _transport(bases: Sequence[Matrix], rep: Representation, left: bool) -> List[Matrix]:
    """
    计算子表示或商表示上的作用矩阵。

    left=True 时 bases[x] 的列是子空间的基，解 K_t·X = ϱ_g·K_s；
    否则 bases[x] 是满秩投影 P_x，解 X·P_s = P_t·ϱ_g。
    """
    g = rep.groupoid
    matrices = []
    for a in g.arrows:
        s, t = g.src[a], g.tgt[a]
        if left:
            x = solve_linear(bases[t], rep.matrices[a] @ bases[s])
        else:
            xt = solve_linear(bases[s].transpose(), (bases[t] @ rep.matrices[a]).transpose())
            x = xt.transpose() if xt is not None else None
        if x is None:
            raise SingularMatrixError(f"箭头 {a} 不保持子空间")
        matrices.append(x)
    return matrices


def kernel_cokernel(m: RepMorphism) -> Tuple[Tuple[Representation, RepMorphism], Tuple[Representation, RepMorphism]]:
    """
    逐纤维计算核与余核。

    Returns:
        ((核表示, 包含态射), (余核表示, 投影态射))

    Raises:
        RankMismatchError: α_x 的秩随对象变化
    """
    r = _check_constant_rank(m)
    e, f = m.source, m.target
    field = m.field
    g = e.groupoid
    kernels = [kernel_basis(alpha) for alpha in m.components]
    projections = [kernel_basis(alpha.transpose()).transpose() for alpha in m.components]
    k_rank = e.rank - r
    q_rank = f.rank - r
    kernel = Representation(g, field, k_rank, _transport(kernels, e, True), f"ker({e.name}→{f.name})")
    cokernel = Representation(g, field, q_rank, _transport(projections, f, False), f"coker({e.name}→{f.name})")
    inclusion = RepMorphism(kernel, e, kernels)
    projection = RepMorphism(f, cokernel, projections)
    return (kernel, inclusion), (cokernel, projection)


# ========================
# 整体截面
# ========================

def global_sections(r: Representation) -> SectionsModule:
    return SectionsModule(r)


def sections_map(m: RepMorphism) -> Matrix:
    """Γ(α) 作为 k 线性映射的矩阵，按截面坐标 (x, i) 排列，是 α_x 的分块对角。"""
    return block_diagonal(m.components, m.field)


def sections_surjective(m: RepMorphism) -> bool:
    """纤维满射时 Γ(α) 是否满射。"""
    return rank(sections_map(m)) == m.target.groupoid.n_objects * m.target.rank


class SectionsTensorIso:
    """Γ(E) ⊗_B Γ(F) 与 Γ(E ⊗ F) 之间互逆的映射 ψ 与 ψ⁻¹。"""

    def __init__(self, e: Representation, f: Representation):
        _check_compatible(e, f)
        self.e = e
        self.f = f
        self.field = e.field
        self.n = e.groupoid.n_objects
        self.de = e.rank
        self.df = f.rank
        self.tensor = tensor_rep(e, f)

    @property
    def dimension(self) -> int:
        return self.n * self.de * self.df

    def domain_index(self, x: int, i: int, j: int) -> int:
        """平衡张量基 (sᵢ·e_x) ⊗ rⱼ 的编号。"""
        return (x * self.de + i) * self.df + j

    def evaluate(self, i: int, j: int, x: int) -> List:
        """ψ(sᵢ ⊗ rⱼ) 在 x 处的值 sᵢ(x) ⊗ rⱼ(x)。"""
        gs_e = global_sections(self.e)
        gs_f = global_sections(self.f)
        u = Matrix([[v] for v in gs_e.value_at(gs_e.basis_section(i), x)], self.field, self.de, 1)
        w = Matrix([[v] for v in gs_f.value_at(gs_f.basis_section(j), x)], self.field, self.df, 1)
        return kron(u, w).column(0)

    def psi(self) -> Matrix:
        gs = global_sections(self.tensor)
        columns = []
        for x in range(self.n):
            for i in range(self.de):
                for j in range(self.df):
                    value = self.evaluate(i, j, x)
                    columns.append({gs.coordinate(x, k): v for k, v in enumerate(value) if v})
        return Matrix.from_sparse_columns(columns, gs.dimension, self.field)

    def psi_inverse(self) -> Matrix:
        """把 x 处的值 Σ w_ij uᵢ⊗uⱼ 拆回 Σ w_ij (sᵢ·e_x) ⊗ rⱼ。"""
        gs = global_sections(self.tensor)
        columns = []
        for x in range(self.n):
            for k in range(self.tensor.rank):
                i, j = divmod(k, self.df)
                columns.append({self.domain_index(x, i, j): self.field.one})
        return Matrix.from_sparse_columns(columns, self.dimension, self.field)

    def check(self) -> CheckReport:
        report = CheckReport("sections tensor iso")
        psi = self.psi()
        psi_inv = self.psi_inverse()
        if not (psi_inv @ psi).is_identity():
            report.add("psi_left_inverse", (self.de, self.df))
        if not (psi @ psi_inv).is_identity():
            report.add("psi_right_inverse", (self.de, self.df))
        report.details = {"domain_dim": self.dimension, "codomain_dim": global_sections(self.tensor).dimension}
        return report


def sections_tensor_iso(e: Representation, f: Representation) -> SectionsTensorIso:
    return SectionsTensorIso(e, f)


def hom_base_change_injectivity(e: Representation, f: Representation) -> CheckReport:
    """
    典范映射 Hom(E, F) ⊗_k B → Hom_B(Γ(E), Γ(F)) 的秩比较。

    α ⊗ e_y 映到只在 y 处取 α_y 的截面映射；单射当且仅当秩为 dim(Hom)·n。
    """
    _check_compatible(e, f)
    g = e.groupoid
    homs = intertwiner_space(e, f)
    block = e.rank * f.rank
    columns = []
    for alpha in homs:
        for y in g.objects:
            column = {}
            for i, row in enumerate(alpha.components[y].sparse_rows):
                for j, v in row.items():
                    column[y * block + i * e.rank + j] = v
            columns.append(column)
    domain_dim = len(homs) * g.n_objects
    r = rank_of_vectors(columns, g.n_objects * block, e.field) if block else 0
    report = CheckReport("hom base change")
    report.details = {
        "hom_dim": len(homs),
        "domain_dim": domain_dim,
        "codomain_dim": g.n_objects * block,
        "rank": r,
        "injective": r == domain_dim,
    }
    if r != domain_dim:
        _, components = connected_components(g)
        report.add("injectivity", (r, domain_dim), f"群胚有 {len(components)} 个连通分支", severity="warning")
        logger.warning("Hom ⊗ B → Hom_B 不是单射: 秩 %d < %d", r, domain_dim)
    return report


def end_unit_dimension(g: FiniteGroupoid, field: FieldSpec) -> CheckReport:
    """End(𝓘) 的维数，等于连通分支数；分支数大于 1 时记录与 End(𝓘) ≅ k 的差异。"""
    dim = len(intertwiner_space(trivial_rep(g, field), trivial_rep(g, field)))
    partition, _ = connected_components(g)
    report = CheckReport("End(I)", details={"dimension": dim, "components": len(partition)})
    if dim != 1:
        report.add("end_unit_is_field", (dim,), "群胚不连通，End(𝓘) 的维数等于分支数", severity="warning")
    return report


def sections_square(phi: GroupoidMorphism, r: Representation) -> CheckReport:
    """
    检查 Γ(φ*E) 等于 Γ(E) 沿 M_k(φ₀) 的基变换：
    拉回截面 s ↦ s∘φ₀ 与 B 作用相容，并把 sᵢ 送到 Γ(φ*E) 的 sᵢ。
    """
    report = CheckReport("sections square")
    restricted = restrict_along(phi, r)
    source = global_sections(r)
    target = global_sections(restricted)
    d = r.rank
    pullback_cols = []
    for y in phi.codomain.objects:
        for i in range(d):
            pullback_cols.append({target.coordinate(x, i): r.field.one for x in phi.domain.objects if phi.object_map[x] == y})
    pullback = Matrix.from_sparse_columns(pullback_cols, target.dimension, r.field)
    for i in range(d):
        if pullback.apply(source.basis_section(i)) != target.basis_section(i):
            report.add("basis_sections", (i,))
    for y in phi.codomain.objects:
        b = {y: r.field.one}
        b_pulled = {x: r.field.one for x in phi.domain.objects if phi.object_map[x] == y}
        for i in range(d):
            left = pullback.apply(source.act(b, source.basis_section(i)))
            right = target.act(b_pulled, target.basis_section(i))
            if left != right:
                report.add("base_action", (y, i))
    if target.rank != source.rank:
        report.add("rank", (source.rank, target.rank))
    report.details = {"rank": d, "dimension": target.dimension}
    return report


# ========================
# 生成族
# ========================

def _dedupe(reps: Sequence[Representation]) -> List[Representation]:
    result: List[Representation] = []
    for r in reps:
        if not any(r.same_matrices(s) for s in result):
            result.append(r)
    return result


def spanning_family(g: FiniteGroupoid, field: FieldSpec) -> List[Representation]:
    """
    每个连通分支给出一个表示：分支上是迷向群 G_{x_c} 的正则表示
    （ϱ_g 为 τ_{t(g)}·g·τ_{s(g)}⁻¹ 的左乘置换矩阵），其余箭头上为单位矩阵，
    再用单位块补齐到统一的秩 max_c |G_{x_c}|。

    Args:
        g: 有限群胚
        field: 基域

    Returns:
        去重后的表示列表
    """
    partition, _ = connected_components(g)
    groups = []
    for block in partition:
        base = block[0]
        loops = g.loops(base)
        groups.append((base, loops, canonical_arrows(g, base)))
    d = max(len(loops) for _, loops, _ in groups)
    family = []
    for c, (base, loops, tau) in enumerate(groups):
        position = {a: k for k, a in enumerate(loops)}
        order = len(loops)
        matrices = []
        for a in g.arrows:
            s, t = g.src[a], g.tgt[a]
            if s not in tau:
                matrices.append(Matrix.identity(d, field))
                continue
            h = g.compose(g.compose(tau[t], a), g.inverse[tau[s]])
            images = [position[g.compose(h, k)] for k in loops] + list(range(order, d))
            matrices.append(permutation_matrix(images, field))
        family.append(Representation(g, field, d, matrices, f"Reg{c}"))
    family = _dedupe(family)
    logger.debug("%s 的生成族: %d 个表示，秩 %d", g.name, len(family), d)
    return family


def coefficient_vectors(g: FiniteGroupoid, family: Sequence[Representation]) -> List[SparseVector]:
    """所有 [t g = y][s g = x](ϱ_g)_ij 作为箭头上的函数。"""
    vectors = []
    for r in family:
        for i in range(r.rank):
            for j in range(r.rank):
                for (x, y), arrows in sorted(g.hom_table.items()):
                    vec = {a: r.matrices[a].value(i, j) for a in arrows if r.matrices[a].value(i, j)}
                    if vec:
                        vectors.append(vec)
    return vectors


def coefficient_span_dimension(g: FiniteGroupoid, family: Sequence[Representation]) -> int:
    """矩阵系数在 B⊗B 作用下张成的空间 V(𝒢) 的维数。"""
    if not family:
        return 0
    return rank_of_vectors(coefficient_vectors(g, family), g.n_arrows, family[0].field)


class RepresentationTools:
    """表示工具类，负责表示文件的读写。"""

    def __init__(self, storage: JsonStorage):
        """
        初始化表示工具。

        Args:
            storage: 数据存储对象
        """
        self.storage = storage

    def load_representation(self, name: str, groupoid: Optional[FiniteGroupoid] = None) -> Representation:
        """
        读取表示文件，群胚字段可以是群胚文件名或内联群胚。

        Raises:
            FileNotFoundError: 找不到文件
            MalformedInputError: 文件结构错误
        """
        data = self.storage.load("representations", name)
        if groupoid is not None:
            data = dict(data, groupoid=groupoid.to_dict())

        def resolve(ref: str) -> FiniteGroupoid:
            return FiniteGroupoid.from_dict(self.storage.load("groupoids", ref))

        return Representation.from_dict(data, resolve)

    def save_representation(self, r: Representation, name: Optional[str] = None, groupoid_ref: Optional[str] = None) -> str:
        return self.storage.save(r.to_dict(groupoid_ref), "representations", name or r.name)
