"""
Hopf 代数胚工具模块：平衡张量积、公理校验、特征标、特征标群胚函子 𝒳ₖ 与余模校验。

公理约定：Δ 与 ε 是 (t 左, s 右) 双模映射；S∘η_s = η_t，S∘η_t = η_s，S² = id；
μ∘(S⊗id)∘Δ = η_s∘ε，μ∘(id⊗S)∘Δ = η_t∘ε。
"""

import itertools
from typing import Any, Dict, List, Optional, Sequence, Tuple

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.algebra.linalg import accumulate, inverse
from groupoid_duality.algebra.matrix import Matrix, SparseVector
from groupoid_duality.errors import (
    GradingError,
    GuardExceededError,
    MalformedInputError,
    SingularMatrixError,
    UnsupportedCharactersError,
)
from groupoid_duality.log import get_logger
from groupoid_duality.models.groupoid import FiniteGroupoid, GroupoidMorphism
from groupoid_duality.models.hopf import (
    CharacterGroupoid,
    Comodule,
    CommutativeAlgebra,
    GradedBimodule,
    HopfAlgebroid,
    HopfMorphism,
    TensorProduct,
)
from groupoid_duality.models.report import CheckReport
from groupoid_duality.storage.json_storage import JsonStorage

logger = get_logger(__name__)

# 公理名称按 (a)-(f) 分组
AXIOM_CLAUSES = {
    "a": ["source_algebra_map", "target_algebra_map", "counit_algebra_map", "comultiplication_algebra_map",
          "counit_bimodule", "comultiplication_bimodule"],
    "b": ["counit_unit"],
    "c": ["coassociativity"],
    "d": ["counit_law"],
    "e": ["antipode_source_target", "antipode_involution"],
    "f": ["antipode_law", "antipode_well_defined"],
}


def tensor_over_base(m: GradedBimodule, n: GradedBimodule) -> TensorProduct:
    """
    平衡张量积 m ⊗_R n。

    Raises:
        GradingError: 两个双模的底代数不同
    """
    return TensorProduct(m, n)


def _first_difference(u: SparseVector, v: SparseVector) -> Optional[int]:
    keys = sorted(set(u) | set(v))
    for k in keys:
        if u.get(k) != v.get(k):
            return k
    return None


def _tensor_of(tensor: TensorProduct, u: SparseVector, v: SparseVector) -> SparseVector:
    """u ⊗ v 在平衡张量积中的坐标，分次不匹配的项为零。"""
    result: SparseVector = {}
    for p, a in u.items():
        for q, b in v.items():
            idx = tensor.pair_index(p, q)
            if idx is not None:
                accumulate(result, {idx: a * b})
    return result


# ========================
# 公理校验
# ========================

def _check_base_map(h: HopfAlgebroid, matrix: Matrix, axiom: str, report: CheckReport) -> None:
    """分裂底代数到 H 的映射是代数同态：幂等元映到正交幂等元且和为 1。"""
    n = h.base_dimension
    images = [dict(matrix.sparse_columns[x]) for x in range(n)]
    for x in range(n):
        for y in range(x, n):
            product = h.multiply(images[x], images[y])
            expected = images[x] if x == y else {}
            if product != expected:
                report.add(axiom, (x, y), "η(e_x)·η(e_y) ≠ η(e_x e_y)")
                return
    total: SparseVector = {}
    for image in images:
        accumulate(total, image)
    if total != h.total.unit:
        report.add(axiom, ("unit",), "η(1) ≠ 1")


def _check_counit_algebra_map(h: HopfAlgebroid, report: CheckReport) -> None:
    m = h.dimension
    counit = [h.epsilon({i: h.field.one}) for i in range(m)]
    for i in range(m):
        for j in range(i, m):
            left = h.epsilon(h.total.product(i, j))
            right = h.base.multiply(counit[i], counit[j])
            if left != right:
                report.add("counit_algebra_map", (i, j), "ε(bᵢbⱼ) ≠ ε(bᵢ)ε(bⱼ)")
                return
    if h.epsilon(h.total.unit) != h.base.unit:
        report.add("counit_algebra_map", ("unit",), "ε(1) ≠ 1")


def _check_comultiplication_algebra_map(h: HopfAlgebroid, deltas: List[SparseVector], report: CheckReport) -> None:
    m = h.dimension
    for i in range(m):
        for j in range(i, m):
            left = h.delta(h.total.product(i, j))
            right = h.tensor_multiply(deltas[i], deltas[j])
            if left != right:
                report.add("comultiplication_algebra_map", (i, j, _first_difference(left, right)), "Δ(bᵢbⱼ) ≠ Δ(bᵢ)Δ(bⱼ)")
                return
    if h.delta(h.total.unit) != h.tensor_unit():
        report.add("comultiplication_algebra_map", ("unit",), "Δ(1) ≠ 1⊗1")


def _check_bimodule_maps(h: HopfAlgebroid, deltas: List[SparseVector], report: CheckReport) -> None:
    """分裂底代数上，双模映射等价于保持 (y, x) 分次。"""
    grades = h.grading
    tensor_grades = h.tensor.grades
    for i, (y, x) in enumerate(grades):
        image = h.epsilon({i: h.field.one})
        if any(z != x or y != x for z in image):
            report.add("counit_bimodule", (i,), f"ε 不保持分次 ({y}, {x})")
            break
    for i, grade in enumerate(grades):
        bad = [k for k in deltas[i] if tensor_grades[k] != grade]
        if bad:
            report.add("comultiplication_bimodule", (i, bad[0]), f"Δ 不保持分次 {grade}")
            break


def _check_coassociativity(h: HopfAlgebroid, deltas: List[SparseVector], report: CheckReport) -> None:
    tensor, tensor3 = h.tensor, h.tensor3
    for a in range(h.dimension):
        left: SparseVector = {}
        right: SparseVector = {}
        for k, c in deltas[a].items():
            i, j = tensor.pairs[k]
            # (Δ⊗id): Δ(bᵢ) ⊗ bⱼ
            for kk, d in deltas[i].items():
                idx = tensor3.pair_index(kk, j)
                if idx is not None:
                    accumulate(left, {idx: c * d})
            # (id⊗Δ): bᵢ ⊗ Δ(bⱼ)
            for kk, d in deltas[j].items():
                p, q = tensor.pairs[kk]
                inner = tensor.pair_index(i, p)
                if inner is None:
                    continue
                idx = tensor3.pair_index(inner, q)
                if idx is not None:
                    accumulate(right, {idx: c * d})
        if left != right:
            k = _first_difference(left, right)
            report.add("coassociativity", (a, list(tensor.pairs[tensor3.pairs[k][0]]) + [tensor3.pairs[k][1]]))
            return


def _check_counit_law(h: HopfAlgebroid, deltas: List[SparseVector], report: CheckReport) -> None:
    for a in range(h.dimension):
        left: SparseVector = {}
        right: SparseVector = {}
        for k, c in deltas[a].items():
            i, j = h.tensor.pairs[k]
            bj = {j: h.field.one}
            bi = {i: h.field.one}
            accumulate(left, h.multiply(h.eta_t(h.epsilon(bi)), bj), c)
            accumulate(right, h.multiply(bi, h.eta_s(h.epsilon(bj))), c)
        expected = {a: h.field.one}
        if left != expected:
            report.add("counit_law", (a, "left"), "(ε⊗id)Δ ≠ id")
            return
        if right != expected:
            report.add("counit_law", (a, "right"), "(id⊗ε)Δ ≠ id")
            return


def _check_antipode(h: HopfAlgebroid, deltas: List[SparseVector], report: CheckReport) -> None:
    field = h.field
    m, n = h.dimension, h.base_dimension
    if h.antipode @ h.source != h.target or h.antipode @ h.target != h.source:
        x = next((x for x in range(n) if h.s_map(h.eta_s({x: field.one})) != h.eta_t({x: field.one})), 0)
        report.add("antipode_source_target", (x,), "S∘η_s ≠ η_t 或 S∘η_t ≠ η_s")
    if not (h.antipode @ h.antipode).is_identity():
        i = next(i for i in range(m) if h.s_map(h.s_map({i: field.one})) != {i: field.one})
        report.add("antipode_involution", (i,), "S∘S ≠ id", severity="warning")

    images = [h.s_map({i: field.one}) for i in range(m)]
    for a in range(m):
        left: SparseVector = {}
        right: SparseVector = {}
        for k, c in deltas[a].items():
            i, j = h.tensor.pairs[k]
            accumulate(left, h.multiply(images[i], {j: field.one}), c)
            accumulate(right, h.multiply({i: field.one}, images[j]), c)
        eps = h.epsilon({a: field.one})
        if left != h.eta_s(eps):
            report.add("antipode_law", (a, "left", _first_difference(left, h.eta_s(eps))), "μ(S⊗id)Δ ≠ η_s∘ε")
            break
        if right != h.eta_t(eps):
            report.add("antipode_law", (a, "right", _first_difference(right, h.eta_t(eps))), "μ(id⊗S)Δ ≠ η_t∘ε")
            break

    # 代表元无关性：平衡关系 bᵢη_s(r) ⊗ bⱼ − bᵢ ⊗ η_t(r)bⱼ 在两个扭曲合成下都映到 0
    for x in range(n):
        s_x = h.eta_s({x: field.one})
        t_x = h.eta_t({x: field.one})
        for i in range(m):
            bi_s = h.multiply({i: field.one}, s_x)
            s_bi_s = h.s_map(bi_s)
            s_bi_t = h.multiply(images[i], t_x)
            for j in range(m):
                bj = {j: field.one}
                t_bj = h.multiply(t_x, bj)
                first = h.multiply(s_bi_s, bj)
                accumulate(first, h.multiply(s_bi_t, bj), -field.one)
                second = h.multiply(bi_s, images[j])
                accumulate(second, h.multiply({i: field.one}, h.s_map(t_bj)), -field.one)
                if first or second:
                    report.add("antipode_well_defined", (i, j, x), "扭曲合成依赖于代表元的选取")
                    return


def check_hopf_axioms(h: HopfAlgebroid) -> CheckReport:
    """
    校验 Hopf 代数胚公理。

    Args:
        h: 待校验的 Hopf 代数胚

    Returns:
        校验报告，每条违反带有基元素编号作为见证；S² ≠ id 只记为警告

    Raises:
        MalformedInputError: Δ 的行数与 H ⊗_R H 的维数不一致
    """
    report = CheckReport(f"hopf {h.name}".strip())
    _check_base_map(h, h.source, "source_algebra_map", report)
    _check_base_map(h, h.target, "target_algebra_map", report)
    _check_counit_algebra_map(h, report)
    identity = Matrix.identity(h.base_dimension, h.field)
    if h.counit @ h.source != identity or h.counit @ h.target != identity:
        report.add("counit_unit", None, "ε∘η_s ≠ id 或 ε∘η_t ≠ id")
    try:
        h.grading
    except GradingError as e:
        report.add("grading", None, str(e))
        return report
    if h.comultiplication.rows != h.tensor.dimension:
        raise MalformedInputError(f"Δ 的行数为 {h.comultiplication.rows}，H⊗_R H 的维数为 {h.tensor.dimension}")

    deltas = [h.delta({i: h.field.one}) for i in range(h.dimension)]
    _check_comultiplication_algebra_map(h, deltas, report)
    _check_bimodule_maps(h, deltas, report)
    _check_coassociativity(h, deltas, report)
    _check_counit_law(h, deltas, report)
    _check_antipode(h, deltas, report)
    report.details = {"dimension": h.dimension, "base_dimension": h.base_dimension, "tensor_dimension": h.tensor.dimension}
    logger.debug("校验 Hopf 代数胚 %s: %s", h.name, report.failed_axioms() or "通过")
    return report


def check_hopf_morphism(alpha: HopfMorphism) -> CheckReport:
    """
    校验 (α₀, α₁) 是 Hopf 代数胚态射。

    Returns:
        校验报告，公理名为 base_algebra_map、total_algebra_map、source、target、counit、comultiplication、antipode
    """
    src, tgt = alpha.source, alpha.target
    field = src.field
    a0, a1 = alpha.base_map, alpha.total_map
    report = CheckReport(f"hopf morphism {src.name} -> {tgt.name}")

    for algebra, image_algebra, matrix, axiom in ((src.base, tgt.base, a0, "base_algebra_map"), (src.total, tgt.total, a1, "total_algebra_map")):
        columns = matrix.sparse_columns
        found = False
        for i in range(algebra.dimension):
            for j in range(i, algebra.dimension):
                left = matrix.apply(algebra.product(i, j))
                right = image_algebra.multiply(columns[i], columns[j])
                if left != right:
                    report.add(axiom, (i, j))
                    found = True
                    break
            if found:
                break
        if matrix.apply(algebra.unit) != image_algebra.unit:
            report.add(axiom, ("unit",), "单位元不保持")

    if a1 @ src.source != tgt.source @ a0:
        report.add("source", None, "α₁∘η_s ≠ η_s∘α₀")
    if a1 @ src.target != tgt.target @ a0:
        report.add("target", None, "α₁∘η_t ≠ η_t∘α₀")
    if tgt.counit @ a1 != a0 @ src.counit:
        report.add("counit", None, "ε∘α₁ ≠ α₀∘ε")
    if tgt.antipode @ a1 != a1 @ src.antipode:
        report.add("antipode", None, "S∘α₁ ≠ α₁∘S")

    columns = a1.sparse_columns
    for i in range(src.dimension):
        left = tgt.delta(columns[i])
        right: SparseVector = {}
        for k, c in src.delta({i: field.one}).items():
            p, q = src.tensor.pairs[k]
            accumulate(right, _tensor_of(tgt.tensor, columns[p], columns[q]), c)
        if left != right:
            report.add("comultiplication", (i,), "Δ∘α₁ ≠ (α₁⊗α₁)∘Δ")
            break
    return report


# ========================
# 特征标
# ========================

def verify_character(a: CommutativeAlgebra, values: Sequence[Any]) -> bool:
    """判断基上的取值是否给出乘法的、保单位的线性映射 a → k。"""
    field = a.field

    def evaluate(vec: SparseVector) -> Any:
        total = field.zero
        for i, v in vec.items():
            total = total + values[i] * v
        return total

    if evaluate(a.unit) != field.one:
        return False
    for i in range(a.dimension):
        for j in range(i, a.dimension):
            if evaluate(a.product(i, j)) != values[i] * values[j]:
                return False
    return True


def _brute_force_characters(a: CommutativeAlgebra) -> List[List[Any]]:
    """按基元素顺序回溯搜索，每个约束在它涉及的最后一个坐标确定后检查。"""
    field = a.field
    n = a.dimension
    checks: List[List[Tuple[int, int, SparseVector]]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            product = a.product(i, j)
            last = max([i, j] + list(product))
            checks[last].append((i, j, product))
    unit_last = max(a.unit) if a.unit else -1
    elements = list(field.elements())
    results: List[List[Any]] = []
    values: List[Any] = []

    def consistent(k: int) -> bool:
        for i, j, product in checks[k]:
            total = field.zero
            for l, v in product.items():
                total = total + values[l] * v
            if total != values[i] * values[j]:
                return False
        if k == unit_last:
            total = field.zero
            for l, v in a.unit.items():
                total = total + values[l] * v
            if total != field.one:
                return False
        return True

    def search(k: int) -> None:
        if k == n:
            results.append(list(values))
            return
        for value in elements:
            values.append(value)
            if consistent(k):
                search(k + 1)
            values.pop()

    if unit_last < 0:
        return []
    search(0)
    return results


def characters(a: CommutativeAlgebra, max_dim: int = 12, max_prime: int = 5) -> List[List[Any]]:
    """
    计算有限维交换代数的全部特征标（代数同态 a → k）。

    Args:
        a: 交换代数
        max_dim: 暴力搜索允许的最大维数
        max_prime: 暴力搜索允许的最大素数

    Returns:
        特征标列表，每个特征标是它在基元素上的取值

    Raises:
        UnsupportedCharactersError: 有理数域上没有分裂见证
        GuardExceededError: 素域上超出暴力搜索上限
        MalformedInputError: 分裂见证不是正交幂等元基
    """
    field = a.field
    n = a.dimension
    if a.is_delta_basis:
        return [[field.one if i == k else field.zero for i in range(n)] for k in range(n)]
    if a.split_witness is not None:
        try:
            dual = inverse(a.split_witness)
        except SingularMatrixError:
            raise MalformedInputError("分裂见证不可逆")
        result = [dual.row(k) for k in range(n)]
        bad = [k for k, chi in enumerate(result) if not verify_character(a, chi)]
        if bad:
            raise MalformedInputError(f"分裂见证的第 {bad[0]} 列不是正交幂等元")
        return result
    if field.is_rational:
        raise UnsupportedCharactersError(f"有理数域上的代数 {a.name} 没有分裂见证，无法计算特征标")
    if n > max_dim or field.modulus > max_prime:
        raise GuardExceededError(f"暴力搜索超出上限: 维数 {n} (≤ {max_dim})，素数 {field.modulus} (≤ {max_prime})")
    logger.debug("在 F_%d 上暴力搜索 %s 的特征标", field.modulus, a.name)
    return _brute_force_characters(a)


def _character_name(a: CommutativeAlgebra, chi: Sequence[Any], k: int, prefix: str) -> str:
    support = [i for i, v in enumerate(chi) if v]
    if a.is_delta_basis and len(support) == 1:
        return a.basis_names[support[0]]
    return f"{prefix}{k}"


def build_character_groupoid(h: HopfAlgebroid, max_dim: int = 12, max_prime: int = 5) -> CharacterGroupoid:
    """
    构造特征标群胚 𝒳ₖ(R, H)。

    对象是 R 的特征标，箭头是 H 的特征标；src = χ∘η_s，tgt = χ∘η_t，
    单位 = π∘ε，逆 = χ∘S，复合 (χ, φ) ↦ (χ⊗φ)∘Δ。

    Args:
        h: Hopf 代数胚
        max_dim: 暴力搜索的最大维数
        max_prime: 暴力搜索的最大素数

    Returns:
        带特征标取值的特征标群胚
    """
    field = h.field
    object_chars = characters(h.base, max_dim, max_prime)
    arrow_chars = characters(h.total, max_dim, max_prime)
    object_keys = {tuple(field.key(v) for v in c): k for k, c in enumerate(object_chars)}
    arrow_keys = {tuple(field.key(v) for v in c): k for k, c in enumerate(arrow_chars)}

    def lookup(table: Dict, values: Sequence[Any], label: str) -> int:
        key = tuple(field.key(v) for v in values)
        if key not in table:
            raise MalformedInputError(f"{label} 不是特征标")
        return table[key]

    def pull_back(chi: Sequence[Any], matrix: Matrix) -> List[Any]:
        """χ∘M，M 的列是基元素的像。"""
        result = []
        for column in matrix.sparse_columns:
            total = field.zero
            for i, v in column.items():
                total = total + chi[i] * v
            result.append(total)
        return result

    src = [lookup(object_keys, pull_back(chi, h.source), "χ∘η_s") for chi in arrow_chars]
    tgt = [lookup(object_keys, pull_back(chi, h.target), "χ∘η_t") for chi in arrow_chars]
    identity = [lookup(arrow_keys, pull_back(pi, h.counit), "π∘ε") for pi in object_chars]
    inverse_map = [lookup(arrow_keys, pull_back(chi, h.antipode), "χ∘S") for chi in arrow_chars]

    delta_rows = h.comultiplication.sparse_rows
    supports = [[(i, v) for i, v in enumerate(chi) if v] for chi in arrow_chars]
    incoming: Dict[int, List[int]] = {}
    for f, t in enumerate(tgt):
        incoming.setdefault(t, []).append(f)
    compose: Dict[Tuple[int, int], int] = {}
    for g in range(len(arrow_chars)):
        for f in incoming.get(src[g], []):
            values: SparseVector = {}
            for p, a in supports[g]:
                for q, b in supports[f]:
                    idx = h.tensor.pair_index(p, q)
                    if idx is not None:
                        accumulate(values, delta_rows[idx], a * b)
            dense = [values.get(i, field.zero) for i in range(h.dimension)]
            key = tuple(field.key(v) for v in dense)
            if key in arrow_keys:
                compose[(g, f)] = arrow_keys[key]
            else:
                logger.warning("(χ%d ⊗ χ%d)∘Δ 不是特征标", g, f)

    groupoid = FiniteGroupoid(
        len(object_chars),
        src,
        tgt,
        identity,
        inverse_map,
        compose,
        [_character_name(h.base, c, k, "x") for k, c in enumerate(object_chars)],
        [_character_name(h.total, c, k, "χ") for k, c in enumerate(arrow_chars)],
        f"X({h.name})",
    )
    logger.debug("特征标群胚 %s: %d 个对象, %d 个箭头", groupoid.name, groupoid.n_objects, groupoid.n_arrows)
    return CharacterGroupoid(h, groupoid, object_chars, arrow_chars)


def character_groupoid(h: HopfAlgebroid, max_dim: int = 12, max_prime: int = 5) -> FiniteGroupoid:
    """𝒳ₖ(R, H) 作为有限群胚。"""
    return build_character_groupoid(h, max_dim, max_prime).groupoid


def apply_X_on_morphism(
    alpha: HopfMorphism,
    source_chars: Optional[CharacterGroupoid] = None,
    target_chars: Optional[CharacterGroupoid] = None,
) -> GroupoidMorphism:
    """
    𝒳ₖ(α): 𝒳ₖ(R', H') → 𝒳ₖ(R, H)，对象和箭头都用 α 预复合。

    Args:
        alpha: Hopf 代数胚态射 (R, H) → (R', H')
        source_chars: (R, H) 的特征标群胚，缺省时重新计算
        target_chars: (R', H') 的特征标群胚，缺省时重新计算

    Returns:
        反变的群胚态射

    Raises:
        MalformedInputError: 预复合的结果不是特征标（α 不是代数同态）
    """
    source_chars = source_chars or build_character_groupoid(alpha.source)
    target_chars = target_chars or build_character_groupoid(alpha.target)
    field = alpha.source.field

    def pull_back(chi: Sequence[Any], matrix: Matrix) -> List[Any]:
        result = []
        for column in matrix.sparse_columns:
            total = field.zero
            for i, v in column.items():
                total = total + chi[i] * v
            result.append(total)
        return result

    object_map = []
    for k, pi in enumerate(target_chars.object_chars):
        image = source_chars.object_of(pull_back(pi, alpha.base_map))
        if image is None:
            raise MalformedInputError(f"对象特征标 {k} 经 α₀ 预复合后不是特征标")
        object_map.append(image)
    arrow_map = []
    for k, chi in enumerate(target_chars.arrow_chars):
        image = source_chars.arrow_of(pull_back(chi, alpha.total_map))
        if image is None:
            raise MalformedInputError(f"箭头特征标 {k} 经 α₁ 预复合后不是特征标")
        arrow_map.append(image)
    return GroupoidMorphism(target_chars.groupoid, source_chars.groupoid, object_map, arrow_map)


# ========================
# 余模
# ========================

def trivial_comodule(h: HopfAlgebroid) -> Comodule:
    """R 自身，余作用由类群元 1_H 给出。"""
    return Comodule.trivial(h)


def validate_comodule(c: Comodule) -> CheckReport:
    """
    校验余模的余结合律 Δ(h_lj) = Σᵢ h_li ⊗ h_ij 与余单位律 ε(h_ij) = δ_ij·1。

    Returns:
        校验报告，见证为 (l, j) 或 (i, j)
    """
    h = c.hopf
    report = CheckReport(f"comodule {c.name}".strip())
    d = c.rank
    one = h.base.unit
    for l, j in itertools.product(range(d), repeat=2):
        left = h.delta(c.coaction[l][j])
        right: SparseVector = {}
        for i in range(d):
            accumulate(right, _tensor_of(h.tensor, c.coaction[l][i], c.coaction[i][j]))
        if left != right:
            report.add("coassociativity", (l, j))
            break
    for i, j in itertools.product(range(d), repeat=2):
        expected = one if i == j else {}
        if h.epsilon(c.coaction[i][j]) != expected:
            report.add("counit", (i, j))
            break
    return report


class HopfTools:
    """Hopf 代数胚工具类，负责 Hopf 代数胚文件的读写。"""

    def __init__(self, storage: JsonStorage):
        """
        初始化 Hopf 代数胚工具。

        Args:
            storage: 数据存储对象
        """
        self.storage = storage

    def load_hopf(self, name: str) -> HopfAlgebroid:
        """
        读取 Hopf 代数胚文件。

        Raises:
            FileNotFoundError: 找不到文件
            MalformedInputError: 文件结构错误
        """
        return HopfAlgebroid.from_dict(self.storage.load("hopf", name))

    def save_hopf(self, h: HopfAlgebroid, name: Optional[str] = None) -> str:
        return self.storage.save(h.to_dict(), "hopf", name or h.name)

    def list_hopf(self) -> List[str]:
        return [item["id"] for item in self.storage.list("hopf")]
