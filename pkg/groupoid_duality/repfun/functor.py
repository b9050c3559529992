"""
ℛₖ 在态射上的作用，以及它与 ζ 的交换方块。
"""

from typing import Dict, Optional, Tuple

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.algebra.matrix import SparseVector
from groupoid_duality.models.groupoid import GroupoidMorphism
from groupoid_duality.models.hopf import HopfAlgebroid, HopfMorphism
from groupoid_duality.models.report import CheckReport
from groupoid_duality.repfun.coend import CoendModel
from groupoid_duality.repfun.concrete import precomposition_morphism
from groupoid_duality.tools.groupoid_tools import validate_morphism
from groupoid_duality.tools.hopf_tools import check_hopf_morphism
from groupoid_duality.tools.representation_tools import restrict_along


def zeta_naturality(phi: GroupoidMorphism, model: CoendModel, alpha: HopfMorphism) -> CheckReport:
    """
    检查 ζ_𝒢 ∘ ℛₖ(φ) = M_k(φ₁) ∘ ζ_𝒦。

    左边把 [E; y,i; x,j] 拉回成 Σ [φ*E; y',i; x',j]（y'、x' 取遍 φ₀ 的原像）再求 ζ_𝒢，
    右边先求 ζ_𝒦 再与 φ₁ 预复合。

    Args:
        phi: 群胚态射 𝒢 → 𝒦
        model: 𝒦 上的余端模型
        alpha: ℛₖ(φ) 的具体模型

    Returns:
        见证为余端基元素编号的报告
    """
    g = phi.domain
    report = CheckReport(f"zeta naturality {g.name} -> {phi.codomain.name}")
    preimage: Dict[int, list] = {}
    for x in g.objects:
        preimage.setdefault(phi.object_map[x], []).append(x)
    restricted = {}
    columns = model.zeta_matrix.sparse_columns
    for k, (e, y, i, x, j) in enumerate(model.basis):
        if e not in restricted:
            restricted[e] = restrict_along(phi, model.family[e])
        rep = restricted[e]
        left: SparseVector = {}
        for y2 in preimage.get(y, []):
            for x2 in preimage.get(x, []):
                for a in g.hom(x2, y2):
                    value = rep.matrices[a].value(i, j)
                    if value:
                        left[a] = value
        right = alpha.total_map.apply(columns[k])
        if left != right:
            report.add("zeta_square", (k,), "ζ 方块不交换")
            break
    return report


def repfun_on_morphism(
    phi: GroupoidMorphism,
    field: FieldSpec,
    model: Optional[CoendModel] = None,
    source: Optional[HopfAlgebroid] = None,
    target: Optional[HopfAlgebroid] = None,
) -> Tuple[HopfMorphism, CheckReport]:
    """
    ℛₖ(φ): ℛₖ(𝒦) → ℛₖ(𝒢)，连同态射校验与 ζ 方块。

    Args:
        phi: 群胚态射 𝒢 → 𝒦
        field: 基域
        model: 𝒦 上的余端模型；给出时检查 ζ 方块
        source: 已构造的 ℛₖ(𝒦)
        target: 已构造的 ℛₖ(𝒢)

    Returns:
        (Hopf 代数胚态射, 报告)
    """
    report = CheckReport(f"R({phi.domain.name} -> {phi.codomain.name})")
    report.merge(validate_morphism(phi), "functor.")
    alpha = precomposition_morphism(phi, field, source, target)
    report.merge(check_hopf_morphism(alpha), "hopf_morphism.")
    if model is not None:
        report.merge(zeta_naturality(phi, model, alpha), "naturality.")
    return alpha, report


def functoriality_check(phi: GroupoidMorphism, psi: GroupoidMorphism, field: FieldSpec) -> CheckReport:
    """ℛₖ(ψ∘φ) = ℛₖ(φ)∘ℛₖ(ψ)，按矩阵比较。"""
    report = CheckReport("R functoriality")
    whole = precomposition_morphism(psi.compose(phi), field)
    first = precomposition_morphism(phi, field)
    second = precomposition_morphism(psi, field)
    if not whole.same_maps(first.compose(second)):
        report.add("functoriality", (phi.domain.name, psi.codomain.name))
    return report
