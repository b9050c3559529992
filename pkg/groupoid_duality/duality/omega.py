"""
余单位 Ω_{(R,H)}: (R, H) → (k^{𝒳₀}, ℛₖ(𝒳ₖ(R, H)))。

求值形式：α₀(r) = [π ↦ π(r)]，α₁(h) = [χ ↦ χ(h)]。
余端路线作为独立的对照：对 ℛₖ(𝒢) 的每个生成表示，把它的余模送进 𝓕，
再取矩阵系数类放进 ℛₖ(𝒳ₖ(H)) 的具体模型，两条路线在基上必须一致。
"""

from typing import List, Optional, Tuple

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.algebra.linalg import kernel_basis, rank, solve_linear
from groupoid_duality.algebra.matrix import Matrix, SparseVector
from groupoid_duality.duality.comodules import comodule_from_rep, f_functor
from groupoid_duality.log import get_logger
from groupoid_duality.models.groupoid import FiniteGroupoid
from groupoid_duality.models.hopf import CharacterGroupoid, HopfAlgebroid, HopfMorphism
from groupoid_duality.models.report import CheckReport
from groupoid_duality.models.representation import Representation
from groupoid_duality.repfun.concrete import precomposition_morphism, repfun_concrete
from groupoid_duality.tools.hopf_tools import apply_X_on_morphism, build_character_groupoid, check_hopf_morphism
from groupoid_duality.tools.representation_tools import spanning_family

logger = get_logger(__name__)


def omega_morphism(
    h: HopfAlgebroid,
    chars: CharacterGroupoid,
    target: Optional[HopfAlgebroid] = None,
) -> HopfMorphism:
    """
    求值形式的 Ω。

    Args:
        h: Hopf 代数胚
        chars: h 的特征标群胚
        target: 已构造的 ℛₖ(𝒳ₖ(h))
    """
    field = h.field
    target = target or repfun_concrete(chars.groupoid, field)
    base_map = Matrix(chars.object_chars, field, len(chars.object_chars), h.base_dimension)
    total_map = Matrix(chars.arrow_chars, field, len(chars.arrow_chars), h.dimension)
    return HopfMorphism(h, target, base_map, total_map)


def omega(
    h: HopfAlgebroid,
    chars: Optional[CharacterGroupoid] = None,
    max_dim: int = 12,
    max_prime: int = 5,
) -> Tuple[HopfMorphism, CheckReport]:
    """
    构造 Ω 并验证它是 Hopf 代数胚态射。

    Args:
        h: 分裂 Hopf 代数胚
        chars: 已构造的特征标群胚
        max_dim: 暴力搜索的最大维数
        max_prime: 暴力搜索的最大素数

    Returns:
        (Ω, 报告)；details 中 bijective 表示 α₀、α₁ 是否都可逆

    Raises:
        UnsupportedCharactersError: 无法计算特征标
        GuardExceededError: 特征标搜索超出上限
    """
    chars = chars or build_character_groupoid(h, max_dim, max_prime)
    alpha = omega_morphism(h, chars)
    report = CheckReport(f"omega {h.name}")
    report.merge(check_hopf_morphism(alpha), "hopf_morphism.")
    a0, a1 = alpha.base_map, alpha.total_map
    bijective = a0.rows == a0.cols and a1.rows == a1.cols and rank(a0) == a0.rows and rank(a1) == a1.rows
    report.details = {
        "dimension": h.dimension,
        "target_dimension": alpha.target.dimension,
        "bijective": bijective,
    }
    if not bijective:
        logger.warning("%s 的 Ω 不是双射", h.name)
    return alpha, report


def coend_route_images(
    g: FiniteGroupoid,
    h: HopfAlgebroid,
    chars: CharacterGroupoid,
    family: List[Representation],
) -> Tuple[Matrix, Matrix]:
    """
    矩阵系数类 η_t(e_y)·h_ij·η_s(e_x) 在 H 中的坐标，以及它们沿余端路线在 ℛₖ(𝒳ₖ(H)) 中的像。

    Returns:
        (C, Z)：C 的列在 H 中，Z 的列在 k^{𝒳₁} 中，列一一对应
    """
    field = h.field
    x_groupoid = chars.groupoid
    coefficients: List[SparseVector] = []
    images: List[SparseVector] = []
    for e in family:
        rep = f_functor(comodule_from_rep(e, h), chars)
        for y in g.objects:
            for x in g.objects:
                arrows = g.hom(x, y)
                for i in range(e.rank):
                    for j in range(e.rank):
                        coefficients.append({a: e.matrices[a].value(i, j) for a in arrows if e.matrices[a].value(i, j)})
                        image: SparseVector = {}
                        for k in x_groupoid.arrows:
                            value = (
                                chars.object_chars[x_groupoid.tgt[k]][y]
                                * rep.matrices[k].value(i, j)
                                * chars.object_chars[x_groupoid.src[k]][x]
                            )
                            if value:
                                image[k] = value
                        images.append(image)
    return (
        Matrix.from_sparse_columns(coefficients, h.dimension, field),
        Matrix.from_sparse_columns(images, x_groupoid.n_arrows, field),
    )


def omega_oracle(
    g: FiniteGroupoid,
    field: FieldSpec,
    family: Optional[List[Representation]] = None,
    alpha: Optional[HopfMorphism] = None,
    chars: Optional[CharacterGroupoid] = None,
) -> CheckReport:
    """
    比较求值形式的 Ω 与余端路线的 Ω。

    解 C·T = I 得到 H 的基在系数类上的表示 T，余端路线的 Ω 为 Z·T；
    Z 必须消灭 C 的核（余端路线良定义），Z·T 必须等于求值形式的 α₁。

    Args:
        g: 有限群胚，h = ℛₖ(𝒢)
        field: 基域
        family: 生成族，默认为 spanning_family(g)
        alpha: 已构造的 Ω
        chars: 已构造的特征标群胚
    """
    h = alpha.source if alpha is not None else repfun_concrete(g, field)
    chars = chars or build_character_groupoid(h)
    if alpha is None:
        alpha = omega_morphism(h, chars)
    family = family if family is not None else spanning_family(g, field)
    report = CheckReport(f"omega oracle {g.name}")
    c, z = coend_route_images(g, h, chars, family)

    t = solve_linear(c, Matrix.identity(h.dimension, field))
    if t is None:
        report.add("oracle_spanning", None, "矩阵系数类不能张成 H")
        return report
    kernel = kernel_basis(c)
    if not (z @ kernel).is_zero():
        report.add("oracle_well_defined", None, "余端路线在系数关系上不为零")
    route = z @ t
    for k in range(h.dimension):
        if route.sparse_columns[k] != alpha.total_map.sparse_columns[k]:
            report.add("oracle_agreement", (k,), "两条路线在基元素上不一致")
            break
    report.details = {"coefficients": c.cols, "relations": kernel.cols}
    return report


def omega_naturality(alpha: HopfMorphism, max_dim: int = 12, max_prime: int = 5) -> CheckReport:
    """
    ℛₖ(𝒳ₖ(α)) ∘ Ω_{H} = Ω_{H'} ∘ α，按矩阵比较。

    Args:
        alpha: Hopf 代数胚态射 (R, H) → (R', H')
    """
    source, target = alpha.source, alpha.target
    chars_s = build_character_groupoid(source, max_dim, max_prime)
    chars_t = build_character_groupoid(target, max_dim, max_prime)
    omega_s = omega_morphism(source, chars_s)
    omega_t = omega_morphism(target, chars_t)
    x_alpha = apply_X_on_morphism(alpha, chars_s, chars_t)
    r_x_alpha = precomposition_morphism(x_alpha, source.field, omega_s.target, omega_t.target)

    report = CheckReport(f"omega naturality {source.name} -> {target.name}")
    left = r_x_alpha.compose(omega_s)
    right = omega_t.compose(alpha)
    if left.base_map != right.base_map:
        report.add("omega_square", ("base",))
    if left.total_map != right.total_map:
        report.add("omega_square", ("total",))
    return report
