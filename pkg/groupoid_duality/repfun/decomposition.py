"""
传递群胚的分解 𝒢 ≅ 𝒢₀ × Gₓ × 𝒢₀ 及其在 ℛₖ 上诱导的同构。
"""

from typing import Tuple

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.algebra.linalg import rank
from groupoid_duality.errors import NonTransitiveError
from groupoid_duality.log import get_logger
from groupoid_duality.models.groupoid import FiniteGroupoid, GroupoidMorphism
from groupoid_duality.models.hopf import HopfMorphism
from groupoid_duality.models.report import CheckReport
from groupoid_duality.repfun.functor import repfun_on_morphism
from groupoid_duality.tools.groupoid_tools import (
    band_groupoid,
    canonical_arrows,
    connected_components,
    is_transitive,
    isotropy_group,
)

logger = get_logger(__name__)


def decomposition_morphism(g: FiniteGroupoid, x: int) -> GroupoidMorphism:
    """
    φˣ: a ↦ (s a, τ_{t a}∘a∘τ_{s a}⁻¹, t a)，τ_y 是 y → x 的规范箭头。

    Raises:
        NonTransitiveError: g 不是传递的
    """
    if not is_transitive(g):
        partition, _ = connected_components(g)
        raise NonTransitiveError(f"{g.name} 不是传递的，共 {len(partition)} 个连通分支", partition)
    group = isotropy_group(g, x)
    band = band_groupoid(g.n_objects, group)
    tau = canonical_arrows(g, x)
    position = {h: k for k, h in enumerate(g.loops(x))}
    n, order = g.n_objects, group.n_arrows
    arrow_map = []
    for a in g.arrows:
        s, t = g.src[a], g.tgt[a]
        loop = g.compose(tau[t], g.compose(a, g.inverse[tau[s]]))
        arrow_map.append((s * order + position[loop]) * n + t)
    return GroupoidMorphism(g, band, list(g.objects), arrow_map)


def transitive_decomposition_iso(g: FiniteGroupoid, x: int, field: FieldSpec) -> Tuple[HopfMorphism, CheckReport]:
    """
    ℛₖ(𝒢₀ × Gₓ × 𝒢₀) → ℛₖ(𝒢) 的 Hopf 代数胚同构，即 B ⊗ k^{Gₓ} ⊗ B ≅ ℛₖ(𝒢)。

    Args:
        g: 传递群胚
        x: 基点
        field: 基域

    Returns:
        (同构, 报告)

    Raises:
        NonTransitiveError: g 不是传递的，异常带有连通分支
    """
    phi = decomposition_morphism(g, x)
    alpha, report = repfun_on_morphism(phi, field)
    report.subject = f"transitive decomposition {g.name} at {g.object_names[x]}"
    if not phi.is_bijective():
        report.add("groupoid_bijective", None, "φˣ 不是双射")
    a0, a1 = alpha.base_map, alpha.total_map
    if a1.rows != a1.cols or rank(a1) != a1.rows or rank(a0) != a0.rows:
        report.add("bijective", None, "诱导的映射不是双射")
    order = len(g.loops(x))
    expected = g.n_objects * g.n_objects * order
    if alpha.source.dimension != expected:
        report.add("dimension", (alpha.source.dimension, expected))
    report.details = {
        "base_point": g.object_names[x],
        "objects": g.n_objects,
        "isotropy_order": order,
        "dimension": alpha.target.dimension,
        "band": phi.codomain.name,
    }
    logger.debug("%s 分解为 %s", g.name, phi.codomain.name)
    return alpha, report
