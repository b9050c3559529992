"""
代表函数 Hopf 代数胚的具体模型：ℛₖ(𝒢) = k^{𝒢₁}，使用 δ 函数基。

结构映射都是表：η_s(a) = a∘s，η_t(a) = a∘t，ε(F) = F∘ι，S(F)(g) = F(g⁻¹)，
Δ(F)(g, f) = F(g∘f)，其中 H ⊗_B H 的基是可复合对 (g, f)。
"""

from typing import Optional

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.algebra.matrix import Matrix
from groupoid_duality.errors import MalformedInputError
from groupoid_duality.log import get_logger
from groupoid_duality.models.groupoid import FiniteGroupoid, GroupoidMorphism
from groupoid_duality.models.hopf import GradedBimodule, HopfAlgebroid, HopfMorphism, SplitAlgebra, TensorProduct
from groupoid_duality.models.report import CheckReport
from groupoid_duality.tools.groupoid_tools import is_transitive

logger = get_logger(__name__)


def repfun_concrete(g: FiniteGroupoid, field: FieldSpec) -> HopfAlgebroid:
    """
    构造 ℛₖ(𝒢) 的具体模型。

    Args:
        g: 有限群胚
        field: 基域

    Returns:
        总代数为 k^{𝒢₁}（δ 函数基）的 Hopf 代数胚，箭头名称作为基的标签
    """
    n, m = g.n_objects, g.n_arrows
    one = field.one
    base = SplitAlgebra(field, g.object_names, f"B({g.name})")
    total = SplitAlgebra(field, g.arrow_names, f"k^{g.name}")

    source = Matrix.from_sparse_columns([{a: one for a in g.arrows if g.src[a] == x} for x in g.objects], m, field)
    target = Matrix.from_sparse_columns([{a: one for a in g.arrows if g.tgt[a] == y} for y in g.objects], m, field)
    counit = Matrix.from_sparse_columns([{g.src[a]: one} if g.is_identity(a) else {} for a in g.arrows], n, field)
    antipode = Matrix.from_sparse_columns([{g.inverse[a]: one} for a in g.arrows], m, field)

    # δ_a 的分次为 (t a, s a)
    graded = GradedBimodule(field, n, [(g.tgt[a], g.src[a]) for a in g.arrows])
    tensor = TensorProduct(graded, graded)
    columns = [{} for _ in g.arrows]
    for k, (left, right) in enumerate(tensor.pairs):
        composite = g.compose(left, right)
        if composite is not None:
            columns[composite][k] = one
    comultiplication = Matrix.from_sparse_columns(columns, tensor.dimension, field)

    logger.debug("ℛₖ(%s): 总维数 %d，H⊗_B H 维数 %d", g.name, m, tensor.dimension)
    return HopfAlgebroid(base, total, source, target, counit, comultiplication, antipode, f"R({g.name})")


def function_hopf_algebra(group: FiniteGroupoid, field: FieldSpec) -> HopfAlgebroid:
    """
    有限群 G 的函数 Hopf 代数 k^G，看作底代数为 k 的 Hopf 代数胚（η_s = η_t）。

    Raises:
        MalformedInputError: 输入不是单对象群胚
    """
    if group.n_objects != 1:
        raise MalformedInputError(f"{group.name} 不是群：对象数为 {group.n_objects}")
    h = repfun_concrete(group, field)
    h.name = f"k^{group.name}"
    return h


def precomposition_morphism(
    phi: GroupoidMorphism,
    field: FieldSpec,
    source: Optional[HopfAlgebroid] = None,
    target: Optional[HopfAlgebroid] = None,
) -> HopfMorphism:
    """
    ℛₖ(φ): ℛₖ(𝒦) → ℛₖ(𝒢)，即用 φ₀、φ₁ 预复合。

    α₀[x][y] = [φ₀ x = y]，α₁[g][a] = [φ₁ g = a]。

    Args:
        phi: 群胚态射 𝒢 → 𝒦
        field: 基域
        source: 已经构造好的 ℛₖ(𝒦)
        target: 已经构造好的 ℛₖ(𝒢)

    Returns:
        Hopf 代数胚态射
    """
    one = field.one
    source = source or repfun_concrete(phi.codomain, field)
    target = target or repfun_concrete(phi.domain, field)
    base_rows = [{phi.object_map[x]: one} for x in phi.domain.objects]
    total_rows = [{phi.arrow_map[a]: one} for a in phi.domain.arrows]
    return HopfMorphism(
        source,
        target,
        Matrix.from_sparse_rows(base_rows, phi.codomain.n_objects, field),
        Matrix.from_sparse_rows(total_rows, phi.codomain.n_arrows, field),
    )


def gt_check(h) -> CheckReport:
    """
    几何传递性检查：按 (t, s) 把 H 分次成 B⊗B 模。

    分裂模自动是投射的；忠实平坦当且仅当每个 (x, y) 块都非零。
    不忠实平坦时记为警告，并列出空块。

    Args:
        h: 具体模型（HopfAlgebroid）或带 concrete 属性的 RepFunAlgebroid

    Returns:
        details 含 projective、faithfully_flat、empty_blocks、block_sizes
    """
    hopf = getattr(h, "concrete", h)
    sizes = hopf.bimodule.block_sizes()
    empty = sorted(pair for pair, size in sizes.items() if size == 0)
    report = CheckReport(f"gt {hopf.name}".strip())
    for pair in empty:
        report.add("faithfully_flat", pair, "空块：该模在 B⊗B 上不是忠实平坦的", severity="warning")
    report.details = {
        "projective": True,
        "projective_reason": "分裂 B⊗B 模的每个分次块都是自由 k 模",
        "faithfully_flat": not empty,
        "empty_blocks": empty,
        "block_sizes": {f"{y},{x}": size for (y, x), size in sorted(sizes.items())},
    }
    groupoid = getattr(h, "groupoid", None)
    if groupoid is not None:
        report.details["transitive"] = is_transitive(groupoid)
    if empty:
        logger.warning("%s 不是几何传递的：%d 个空块", hopf.name, len(empty))
    return report
