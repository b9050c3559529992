"""
单位 Θ_𝒢: 𝒢 → 𝒳ₖ(ℛₖ(𝒢))，对象取求值特征标，箭头取 F ↦ ζ(F)(g)。
"""

from typing import Optional, Tuple

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.errors import MalformedInputError
from groupoid_duality.models.groupoid import FiniteGroupoid, GroupoidMorphism
from groupoid_duality.models.hopf import CharacterGroupoid, HopfAlgebroid
from groupoid_duality.models.report import CheckReport
from groupoid_duality.repfun.concrete import precomposition_morphism, repfun_concrete
from groupoid_duality.tools.groupoid_tools import validate_morphism
from groupoid_duality.tools.hopf_tools import apply_X_on_morphism, build_character_groupoid


def theta_morphism(g: FiniteGroupoid, h: HopfAlgebroid, chars: CharacterGroupoid) -> GroupoidMorphism:
    """
    在具体模型上构造 Θ_𝒢。

    具体模型的基是 δ 函数，ev_x 与 F ↦ F(g) 在基上的取值就是对应的单位向量。

    Raises:
        MalformedInputError: 求值不是 ℛₖ(𝒢) 的特征标
    """
    field = h.field
    object_map = []
    for x in g.objects:
        k = chars.object_of([field.one if y == x else field.zero for y in g.objects])
        if k is None:
            raise MalformedInputError(f"ev_{g.object_names[x]} 不是底代数的特征标")
        object_map.append(k)
    arrow_map = []
    for a in g.arrows:
        k = chars.arrow_of([field.one if b == a else field.zero for b in g.arrows])
        if k is None:
            raise MalformedInputError(f"在箭头 {g.arrow_names[a]} 处求值不是特征标")
        arrow_map.append(k)
    return GroupoidMorphism(g, chars.groupoid, object_map, arrow_map)


def theta(
    g: FiniteGroupoid,
    field: FieldSpec,
    h: Optional[HopfAlgebroid] = None,
    chars: Optional[CharacterGroupoid] = None,
) -> Tuple[GroupoidMorphism, CheckReport]:
    """
    Θ_𝒢 及其函子性、双射性报告。

    Args:
        g: 有限群胚
        field: 基域
        h: 已构造的 ℛₖ(𝒢)
        chars: 已构造的 𝒳ₖ(ℛₖ(𝒢))

    Returns:
        (Θ_𝒢, 报告)；details 中 theta_iso 表示 Θ 是否为群胚同构
    """
    h = h or repfun_concrete(g, field)
    chars = chars or build_character_groupoid(h)
    morphism = theta_morphism(g, h, chars)
    report = CheckReport(f"theta {g.name}")
    report.merge(validate_morphism(morphism), "functor.")
    bijective = morphism.is_bijective()
    if not bijective:
        report.add("bijective", None, "Θ 在对象或箭头上不是双射")
    report.details = {
        "objects": [g.n_objects, chars.groupoid.n_objects],
        "arrows": [g.n_arrows, chars.groupoid.n_arrows],
        "theta_iso": bijective and report.ok,
    }
    return morphism, report


def theta_naturality(phi: GroupoidMorphism, field: FieldSpec) -> CheckReport:
    """
    𝒳ₖ(ℛₖ(φ)) ∘ Θ_𝒢 = Θ_𝒦 ∘ φ，按对象表和箭头表比较。

    Args:
        phi: 群胚态射 𝒢 → 𝒦
        field: 基域
    """
    g, k = phi.domain, phi.codomain
    hg, hk = repfun_concrete(g, field), repfun_concrete(k, field)
    chars_g, chars_k = build_character_groupoid(hg), build_character_groupoid(hk)
    theta_g, _ = theta(g, field, hg, chars_g)
    theta_k, _ = theta(k, field, hk, chars_k)
    alpha = precomposition_morphism(phi, field, hk, hg)
    x_alpha = apply_X_on_morphism(alpha, chars_k, chars_g)

    report = CheckReport(f"theta naturality {g.name} -> {k.name}")
    left = x_alpha.compose(theta_g)
    right = theta_k.compose(phi)
    for x in g.objects:
        if left.object_map[x] != right.object_map[x]:
            report.add("theta_square", ("object", x))
            break
    for a in g.arrows:
        if left.arrow_map[a] != right.arrow_map[a]:
            report.add("theta_square", ("arrow", a))
            break
    return report
