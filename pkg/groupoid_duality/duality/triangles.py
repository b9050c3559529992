"""
三角恒等式与 hom 集双射。

triangle_one: ℛₖ(Θ_𝒢) ∘ Ω_{ℛₖ(𝒢)} = id
triangle_two: 𝒳ₖ(Ω_H) ∘ Θ_{𝒳ₖ(H)} = id
duality_bijection_check: Φ(α) = 𝒳ₖ(α)∘Θ_𝒢 与 Ψ(φ) = ℛₖ(φ)∘Ω_H 互逆。
"""

from typing import List, Optional

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.duality.omega import omega_morphism
from groupoid_duality.duality.theta import theta_morphism
from groupoid_duality.log import get_logger
from groupoid_duality.models.groupoid import FiniteGroupoid, GroupoidMorphism
from groupoid_duality.models.hopf import HopfAlgebroid, HopfMorphism
from groupoid_duality.models.report import CheckReport
from groupoid_duality.repfun.concrete import precomposition_morphism, repfun_concrete
from groupoid_duality.tools.groupoid_tools import enumerate_morphisms
from groupoid_duality.tools.hopf_tools import apply_X_on_morphism, build_character_groupoid, check_hopf_morphism

logger = get_logger(__name__)


def _first_column(left: HopfMorphism, right: HopfMorphism) -> Optional[tuple]:
    """第一个不相等的列，先比较 α₀ 再比较 α₁。"""
    for label, a, b in (("base", left.base_map, right.base_map), ("total", left.total_map, right.total_map)):
        if a.shape != b.shape:
            return (label, "shape")
        for k in range(a.cols):
            if a.sparse_columns[k] != b.sparse_columns[k]:
                return (label, k)
    return None


def _first_arrow(left: GroupoidMorphism, right: GroupoidMorphism) -> Optional[tuple]:
    for x, (p, q) in enumerate(zip(left.object_map, right.object_map)):
        if p != q:
            return ("object", x)
    for a, (p, q) in enumerate(zip(left.arrow_map, right.arrow_map)):
        if p != q:
            return ("arrow", a)
    return None


def triangle_one(g: FiniteGroupoid, field: FieldSpec) -> CheckReport:
    """
    验证 ℛₖ(Θ_𝒢) ∘ Ω_{(B, ℛₖ(𝒢))} 在底和总代数上都是恒等映射。

    Returns:
        报告，见证为第一个不相等的列
    """
    h = repfun_concrete(g, field)
    chars = build_character_groupoid(h)
    theta = theta_morphism(g, h, chars)
    omega = omega_morphism(h, chars)
    r_theta = precomposition_morphism(theta, field, omega.target, h)
    composite = r_theta.compose(omega)

    report = CheckReport(f"triangle one {g.name}")
    witness = _first_column(composite, HopfMorphism.identity(h))
    if witness is not None:
        report.add("triangle_one", witness, "ℛₖ(Θ)∘Ω ≠ id")
    return report


def triangle_two(h: HopfAlgebroid, max_dim: int = 12, max_prime: int = 5) -> CheckReport:
    """
    验证 𝒳ₖ(Ω_H) ∘ Θ_{𝒳ₖ(H)} 是 𝒳ₖ(H) 上的恒等函子。

    Returns:
        报告，见证为第一个不相等的对象或箭头
    """
    chars = build_character_groupoid(h, max_dim, max_prime)
    omega = omega_morphism(h, chars)
    r_x = omega.target
    chars_r_x = build_character_groupoid(r_x)
    theta = theta_morphism(chars.groupoid, r_x, chars_r_x)
    x_omega = apply_X_on_morphism(omega, chars, chars_r_x)
    composite = x_omega.compose(theta)

    report = CheckReport(f"triangle two {h.name}")
    witness = _first_arrow(composite, GroupoidMorphism.identity(chars.groupoid))
    if witness is not None:
        report.add("triangle_two", witness, "𝒳ₖ(Ω)∘Θ ≠ id")
    return report


def duality_bijection_check(h: HopfAlgebroid, g: FiniteGroupoid, guard: int = 10) -> CheckReport:
    """
    在群胚一侧穷举验证 Hom(𝒢, 𝒳ₖ(H)) 与 Hom(H, ℛₖ(𝒢)) 之间的双射。

    对每个 φ: 𝒢 → 𝒳ₖ(H) 验证 Ψ(φ) 是 Hopf 代数胚态射且 Φ(Ψ(φ)) = φ，
    再验证 Ψ∘Φ 在 Ψ 的像上是恒等，以及 Ψ 的像两两不同。

    Args:
        h: 分裂 Hopf 代数胚
        g: 有限群胚
        guard: g 的箭头数上限

    Returns:
        报告，details 含 morphisms、verified、distinct_images

    Raises:
        GuardExceededError: 超出枚举上限
    """
    field = h.field
    chars = build_character_groupoid(h)
    omega = omega_morphism(h, chars)
    rg = repfun_concrete(g, field)
    chars_rg = build_character_groupoid(rg)
    theta = theta_morphism(g, rg, chars_rg)

    report = CheckReport(f"duality bijection {g.name} / {h.name}")
    morphisms = enumerate_morphisms(g, chars.groupoid, guard)
    images: List[HopfMorphism] = []
    verified = 0
    for n, phi in enumerate(morphisms):
        # Ψ(φ): H → ℛₖ(𝒳ₖ(H)) → ℛₖ(𝒢)
        psi = precomposition_morphism(phi, field, omega.target, rg).compose(omega)
        check = check_hopf_morphism(psi)
        if not check.ok:
            report.merge(check, f"psi[{n}].")
            continue
        # Φ(Ψ(φ)): 𝒢 → 𝒳ₖ(ℛₖ(𝒢)) → 𝒳ₖ(H)
        back = apply_X_on_morphism(psi, chars, chars_rg).compose(theta)
        witness = _first_arrow(back, phi)
        if witness is not None:
            report.add("phi_after_psi", (n,) + witness, "Φ(Ψ(φ)) ≠ φ")
            continue
        again = precomposition_morphism(back, field, omega.target, rg).compose(omega)
        if not again.same_maps(psi):
            report.add("psi_after_phi", (n,), "Ψ(Φ(α)) ≠ α")
            continue
        verified += 1
        images.append(psi)
    distinct = sum(1 for k, a in enumerate(images) if not any(a.same_maps(b) for b in images[:k]))
    if distinct != len(images):
        report.add("psi_injective", (len(images), distinct), "Ψ 的像有重复")
    report.details = {
        "morphisms": len(morphisms),
        "verified": verified,
        "distinct_images": distinct,
    }
    logger.debug("%s 与 %s 之间验证了 %d 个态射", g.name, h.name, verified)
    return report
