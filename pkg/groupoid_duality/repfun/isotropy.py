"""
迷向构造：迷向群胚商、迷向 Hopf 代数、以及同一分支内迷向群之间的共轭同构。
"""

from typing import Tuple

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.algebra.linalg import kernel_basis, rank, same_span
from groupoid_duality.algebra.matrix import Matrix
from groupoid_duality.errors import NonTransitiveError
from groupoid_duality.log import get_logger
from groupoid_duality.models.groupoid import FiniteGroupoid, GroupoidMorphism
from groupoid_duality.models.hopf import HopfAlgebroid, HopfMorphism
from groupoid_duality.models.report import CheckReport
from groupoid_duality.repfun.concrete import function_hopf_algebra, precomposition_morphism, repfun_concrete
from groupoid_duality.tools.groupoid_tools import (
    canonical_arrows,
    component_of,
    connected_components,
    isotropy_group,
    isotropy_groupoid,
    validate_morphism,
)
from groupoid_duality.tools.hopf_tools import check_hopf_axioms, check_hopf_morphism

logger = get_logger(__name__)


def _is_bijective(alpha: HopfMorphism) -> bool:
    a0, a1 = alpha.base_map, alpha.total_map
    return (
        a0.rows == a0.cols
        and a1.rows == a1.cols
        and rank(a0) == a0.rows
        and rank(a1) == a1.rows
    )


def isotropy_quotient(g: FiniteGroupoid, field: FieldSpec) -> Tuple[FiniteGroupoid, HopfMorphism, CheckReport]:
    """
    ℛₖ(𝒢) ↠ ℛₖ(𝒢ⁱ)：把函数限制到自环上。

    核与理想 ⟨η_s(b) − η_t(b) : b ∈ B⟩ 作为子空间比较（规范基相等）。

    Args:
        g: 有限群胚
        field: 基域

    Returns:
        (迷向群胚, 商映射, 报告)
    """
    gi, inclusion = isotropy_groupoid(g)
    h = repfun_concrete(g, field)
    quotient = repfun_concrete(gi, field)
    alpha = precomposition_morphism(inclusion, field, h, quotient)

    report = CheckReport(f"isotropy quotient {g.name}")
    report.merge(check_hopf_morphism(alpha), "hopf_morphism.")
    report.merge(check_hopf_axioms(quotient), "target.")
    if quotient.source != quotient.target:
        report.add("target.source_equals_target", None, "商的 η_s ≠ η_t")

    kernel = kernel_basis(alpha.total_map).sparse_columns
    ideal = []
    for x in g.objects:
        e_x = {x: field.one}
        generator = dict(h.eta_s(e_x))
        for k, v in h.eta_t(e_x).items():
            generator[k] = generator.get(k, field.zero) - v
        generator = {k: v for k, v in generator.items() if v}
        for i in range(h.dimension):
            product = h.multiply(h.total.basis_vector(i), generator)
            if product:
                ideal.append(product)
    if not same_span(kernel, ideal, h.dimension, field):
        report.add("kernel_equals_ideal", None, "商映射的核不等于 s − t 生成的理想")
    surjective = rank(alpha.total_map) == quotient.dimension
    if not surjective:
        report.add("surjective", None, "限制映射不是满射")
    report.details = {
        "dimension": h.dimension,
        "quotient_dimension": quotient.dimension,
        "kernel_dimension": len(kernel),
        "loops": gi.n_arrows,
    }
    return gi, alpha, report


def isotropy_hopf_algebra(g: FiniteGroupoid, x: int, field: FieldSpec) -> Tuple[HopfAlgebroid, CheckReport]:
    """
    比较 k_x ⊗_B ℛₖ(𝒢) ⊗_B k_x 与 k^{Gₓ}。

    两边的基都以 x 处的自环命名，比较映射按名称对应。

    Args:
        g: 有限群胚
        x: 对象编号
        field: 基域

    Returns:
        (k^{Gₓ}, 报告)
    """
    block = repfun_concrete(g, field).isotropy_block(x)
    group = isotropy_group(g, x)
    algebra = function_hopf_algebra(group, field)

    report = CheckReport(f"isotropy hopf algebra {g.name} at {g.object_names[x]}")
    report.merge(check_hopf_axioms(block), "block.")
    report.merge(check_hopf_axioms(algebra), "group.")

    position = {name: i for i, name in enumerate(block.total.basis_names)}
    rows = [{} for _ in range(block.dimension)]
    for j, name in enumerate(algebra.total.basis_names):
        rows[position[name]][j] = field.one
    comparison = HopfMorphism(
        algebra,
        block,
        Matrix.identity(1, field),
        Matrix.from_sparse_rows(rows, algebra.dimension, field),
    )
    report.merge(check_hopf_morphism(comparison), "comparison.")
    if not _is_bijective(comparison):
        report.add("comparison.bijective", None, "比较映射不是双射")
    report.details = {"object": g.object_names[x], "dimension": algebra.dimension}
    return algebra, report


def isotropy_conjugation_iso(
    g: FiniteGroupoid, x: int, y: int, field: FieldSpec
) -> Tuple[GroupoidMorphism, HopfMorphism, CheckReport]:
    """
    同一分支内的共轭同构 Gₓ → G_y, h ↦ a∘h∘a⁻¹，a 是 x → y 的规范箭头。

    Returns:
        (群同构, 诱导的 ℛₖ(G_y) → ℛₖ(Gₓ), 报告)

    Raises:
        NonTransitiveError: x 与 y 不在同一分支
    """
    if y not in component_of(g, x):
        partition, _ = connected_components(g)
        raise NonTransitiveError(
            f"{g.object_names[x]} 与 {g.object_names[y]} 不在同一连通分支",
            partition,
        )
    tau = canonical_arrows(g, x)
    back = tau[y]
    there = g.inverse[back]
    gx, gy = isotropy_group(g, x), isotropy_group(g, y)
    loops_y = {a: k for k, a in enumerate(g.loops(y))}
    arrow_map = [loops_y[g.compose(there, g.compose(h, back))] for h in g.loops(x)]
    conjugation = GroupoidMorphism(gx, gy, [0], arrow_map)

    report = CheckReport(f"isotropy conjugation {g.object_names[x]} -> {g.object_names[y]}")
    report.merge(validate_morphism(conjugation), "group.")
    if not conjugation.is_bijective():
        report.add("group.bijective", None, "共轭映射不是双射")
    alpha = precomposition_morphism(conjugation, field)
    report.merge(check_hopf_morphism(alpha), "hopf_morphism.")
    if not _is_bijective(alpha):
        report.add("hopf_morphism.bijective", None, "诱导的 Hopf 代数映射不是双射")
    logger.debug("共轭 %s -> %s 经由箭头 %s", x, y, g.arrow_names[there])
    return conjugation, alpha, report
