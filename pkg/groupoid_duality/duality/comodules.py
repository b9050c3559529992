"""
表示与余模之间的两个方向。

comodule_from_rep: 表示 E 的整体截面 Γ(E) ≅ B^d，余作用 s_j ↦ Σᵢ sᵢ ⊗ [sᵢ*⊗s_j]，
其系数是函数 g ↦ (ϱ_g)ᵢⱼ。
f_functor: 余模 P 给出特征标群胚的表示，纤维 P ⊗_R k_x，
箭头 χ 作用为 p ⊗ c ↦ p₀ ⊗ χ(p₁)c，即矩阵 (χ(h_ij))。
"""

from typing import Optional

from groupoid_duality.algebra.matrix import Matrix
from groupoid_duality.errors import MalformedInputError
from groupoid_duality.models.groupoid import GroupoidMorphism
from groupoid_duality.models.hopf import CharacterGroupoid, Comodule, HopfAlgebroid
from groupoid_duality.models.report import CheckReport
from groupoid_duality.models.representation import Representation
from groupoid_duality.repfun.concrete import repfun_concrete
from groupoid_duality.tools.hopf_tools import validate_comodule
from groupoid_duality.tools.representation_tools import restrict_along


def comodule_from_rep(e: Representation, h: Optional[HopfAlgebroid] = None) -> Comodule:
    """
    把表示变成 ℛₖ(𝒢) 上的余模。

    Args:
        e: 群胚表示
        h: 已构造的 ℛₖ(𝒢)（具体模型）

    Returns:
        秩为 e.rank 的余模，余作用矩阵的第 (i, j) 项是 g ↦ (ϱ_g)ᵢⱼ
    """
    g = e.groupoid
    h = h or repfun_concrete(g, e.field)
    coaction = [
        [{a: e.matrices[a].value(i, j) for a in g.arrows if e.matrices[a].value(i, j)} for j in range(e.rank)]
        for i in range(e.rank)
    ]
    return Comodule(h, e.rank, coaction, f"Γ({e.name})" if e.name else "")


def f_functor(c: Comodule, chars: CharacterGroupoid) -> Representation:
    """
    余模到特征标群胚表示的函子 𝓕。

    Args:
        c: 余模
        chars: c.hopf 的特征标群胚

    Returns:
        𝒳ₖ(R, H) 的表示，纤维维数等于余模的秩

    Raises:
        MalformedInputError: 余模不满足余结合律或余单位律
    """
    check = validate_comodule(c)
    if not check.ok:
        raise MalformedInputError(f"余模 {c.name} 不合法: {', '.join(check.failed_axioms())}")
    field = c.hopf.field
    matrices = []
    for k in chars.groupoid.arrows:
        rows = [[chars.evaluate(k, c.coaction[i][j]) for j in range(c.rank)] for i in range(c.rank)]
        matrices.append(Matrix(rows, field, c.rank, c.rank))
    return Representation(chars.groupoid, field, c.rank, matrices, f"F({c.name})" if c.name else "")


def reconstruction_check(e: Representation, theta: GroupoidMorphism, chars: CharacterGroupoid) -> CheckReport:
    """
    𝓕(comodule_from_rep(e)) 沿 Θ 拉回后与 e 逐个矩阵相等。

    Args:
        e: 群胚表示
        theta: Θ_𝒢
        chars: 𝒳ₖ(ℛₖ(𝒢))，与 theta 的陪域一致
    """
    report = CheckReport(f"reconstruction {e.name}".strip())
    rebuilt = restrict_along(theta, f_functor(comodule_from_rep(e, chars.hopf), chars))
    for a in e.groupoid.arrows:
        if rebuilt.matrices[a] != e.matrices[a]:
            report.add("reconstruction", (a,), "𝓕∘Γ 沿 Θ 拉回后矩阵不同")
            break
    return report
