"""
群胚工具模块：公理校验、标准构造、连通分支、迷向群、子群胚和态射枚举。
"""

import itertools
import json
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from groupoid_duality.errors import GuardExceededError, MalformedInputError
from groupoid_duality.log import get_logger
from groupoid_duality.models.groupoid import FiniteGroupoid, GroupoidMorphism
from groupoid_duality.models.report import CheckReport
from groupoid_duality.storage.json_storage import JsonStorage

logger = get_logger(__name__)


# ========================
# 公理校验
# ========================

def validate_groupoid(g: FiniteGroupoid) -> CheckReport:
    """
    校验群胚公理。

    Args:
        g: 待校验的群胚

    Returns:
        校验报告，每条违反都带有见证元组
    """
    report = CheckReport(f"groupoid {g.name}".strip())
    src, tgt = g.src, g.tgt

    for x in g.objects:
        i = g.identity[x]
        if src[i] != x or tgt[i] != x:
            report.add("identity_endpoints", (x, i))

    composable = set(g.composable_pairs)
    for pair in g.composable_pairs:
        if pair not in g.compose_table:
            report.add("composition_domain", pair, "可复合的对缺少复合结果")
    for (a, b), ab in sorted(g.compose_table.items()):
        if (a, b) not in composable:
            report.add("composition_domain", (a, b), "不可复合的对出现在复合表中")
            continue
        if src[ab] != src[b] or tgt[ab] != tgt[a]:
            report.add("composition_endpoints", (a, b, ab))

    for a in g.arrows:
        if g.compose(a, g.identity[src[a]]) != a:
            report.add("unit_law", (a, g.identity[src[a]]), "右单位律")
        if g.compose(g.identity[tgt[a]], a) != a:
            report.add("unit_law", (g.identity[tgt[a]], a), "左单位律")

    for (h, a) in g.composable_pairs:
        ha = g.compose(h, a)
        if ha is None:
            continue
        for b in g.arrows_into(src[a]):
            ab = g.compose(a, b)
            if ab is None:
                continue
            left = g.compose(ha, b)
            right = g.compose(h, ab)
            if left != right:
                report.add("associativity", (h, a, b), f"({h}∘{a})∘{b} = {left}, {h}∘({a}∘{b}) = {right}")

    for a in g.arrows:
        inv = g.inverse[a]
        if src[inv] != tgt[a] or tgt[inv] != src[a]:
            report.add("inverse_endpoints", (a, inv))
            continue
        if g.compose(inv, a) != g.identity[src[a]] or g.compose(a, inv) != g.identity[tgt[a]]:
            report.add("inverse_law", (a, inv))

    logger.debug("校验群胚 %s: %d 条违反", g.name, len(report.violations))
    return report


# ========================
# 标准构造
# ========================

def _build(
    n_objects: int,
    endpoints: Sequence[Tuple[int, int]],
    rule: Callable[[int, int], int],
    identity: Sequence[int],
    inverse: Sequence[int],
    object_names: Optional[Sequence[str]] = None,
    arrow_names: Optional[Sequence[str]] = None,
    name: str = "",
) -> FiniteGroupoid:
    """按复合规则填满所有可复合对的复合表。"""
    incoming: Dict[int, List[int]] = {}
    for f, (_, t) in enumerate(endpoints):
        incoming.setdefault(t, []).append(f)
    compose = {}
    for g, (s, _) in enumerate(endpoints):
        for f in incoming.get(s, []):
            compose[(g, f)] = rule(g, f)
    return FiniteGroupoid(
        n_objects,
        [s for s, _ in endpoints],
        [t for _, t in endpoints],
        identity,
        inverse,
        compose,
        object_names,
        arrow_names,
        name,
    )


def unit_groupoid(n: int) -> FiniteGroupoid:
    """只有单位箭头的群胚 𝒰(X)。"""
    if n < 1:
        raise MalformedInputError("unit_groupoid 需要至少一个对象")
    return _build(
        n,
        [(x, x) for x in range(n)],
        lambda g, f: g,
        list(range(n)),
        list(range(n)),
        arrow_names=[f"id{x}" for x in range(n)],
        name=f"unit({n})",
    )


def pair_groupoid(n: int) -> FiniteGroupoid:
    """
    对群胚 𝒱(X)：箭头 (y, x) 表示 x → y，编号为 y·n + x。
    """
    if n < 1:
        raise MalformedInputError("pair_groupoid 需要至少一个对象")
    endpoints = [(x, y) for y in range(n) for x in range(n)]

    def rule(g: int, f: int) -> int:
        z = g // n
        x = f % n
        return z * n + x

    return _build(
        n,
        endpoints,
        rule,
        [x * n + x for x in range(n)],
        [(a % n) * n + a // n for a in range(n * n)],
        arrow_names=[f"({a // n},{a % n})" for a in range(n * n)],
        name=f"pair({n})",
    )


def group_from_table(table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None, name: str = "") -> FiniteGroupoid:
    """
    由乘法表构造单对象群胚，table[a][b] = a·b（先 b 后 a）。

    Raises:
        MalformedInputError: 乘法表没有单位元或元素没有逆
    """
    m = len(table)
    if m == 0 or any(len(row) != m for row in table):
        raise MalformedInputError("乘法表必须是非空方阵")
    unit = next((e for e in range(m) if all(table[e][a] == a and table[a][e] == a for a in range(m))), None)
    if unit is None:
        raise MalformedInputError("乘法表没有单位元")
    inverse = []
    for a in range(m):
        inv = next((b for b in range(m) if table[a][b] == unit and table[b][a] == unit), None)
        if inv is None:
            raise MalformedInputError(f"元素 {a} 没有逆元")
        inverse.append(inv)
    return _build(1, [(0, 0)] * m, lambda g, f: table[g][f], [unit], inverse, ["*"], names, name)


def cyclic_group(n: int) -> FiniteGroupoid:
    """循环群 Z/n，元素 k 编号为 k。"""
    if n < 1:
        raise MalformedInputError("cyclic_group 需要 n ≥ 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return group_from_table(table, [str(k) for k in range(n)], f"Z/{n}")


def permutation_group(generators: Sequence[Sequence[int]], name: str = "") -> FiniteGroupoid:
    """
    由置换生成元构造置换群，元素按数组形式排序（单位元在最前）。

    Args:
        generators: 以数组形式给出的生成元
        name: 群的名称

    Returns:
        单对象群胚，复合 g∘f 为先作用 f 再作用 g
    """
    if not generators:
        raise MalformedInputError("permutation_group 至少需要一个生成元")
    group = PermutationGroup([Permutation(list(gen)) for gen in generators])
    elements = sorted(group.elements, key=lambda p: p.array_form)
    index = {tuple(p.array_form): i for i, p in enumerate(elements)}
    # sympy 中 p*q 先作用 p 再作用 q
    table = [[index[tuple((f * g).array_form)] for f in elements] for g in elements]
    names = ["".join(str(i) for i in p.array_form) for p in elements]
    return group_from_table(table, names, name or f"Perm({len(elements)})")


def symmetric_group_3() -> FiniteGroupoid:
    return permutation_group([[1, 0, 2], [1, 2, 0]], "S3")


def validate_action(group: FiniteGroupoid, action: Sequence[Sequence[int]], points: int) -> CheckReport:
    """校验作用表 action[g][x] 是否是群作用。"""
    report = CheckReport(f"action of {group.name}".strip())
    if len(action) != group.n_arrows or any(len(row) != points for row in action):
        raise MalformedInputError("作用表的形状与群阶或点数不一致")
    e = group.identity[0]
    for x in range(points):
        if action[e][x] != x:
            report.add("action_identity", (e, x))
    for (h, g), hg in sorted(group.compose_table.items()):
        for x in range(points):
            if action[hg][x] != action[h][action[g][x]]:
                report.add("action_compatibility", (h, g, x))
    return report


def action_groupoid(group: FiniteGroupoid, action: Sequence[Sequence[int]], points: int, name: str = "") -> FiniteGroupoid:
    """
    作用群胚 G ⋉ X：箭头 (g, x) 编号为 g·n + x，源为 x，靶为 g·x。

    Raises:
        MalformedInputError: 作用表不满足群作用公理，信息中给出见证
    """
    if group.n_objects != 1:
        raise MalformedInputError("action_groupoid 的第一个参数必须是群（单对象群胚）")
    report = validate_action(group, action, points)
    if not report.ok:
        first = report.errors[0]
        raise MalformedInputError(f"不是群作用: {first.axiom} 见证 {first.witness}")
    n = points
    endpoints = [(x, action[g][x]) for g in group.arrows for x in range(n)]

    def rule(hy: int, gx: int) -> int:
        h = hy // n
        g, x = divmod(gx, n)
        return group.compose(h, g) * n + x

    e = group.identity[0]
    return _build(
        n,
        endpoints,
        rule,
        [e * n + x for x in range(n)],
        [group.inverse[a // n] * n + action[a // n][a % n] for a in range(group.n_arrows * n)],
        arrow_names=[f"({group.arrow_names[a // n]},{a % n})" for a in range(group.n_arrows * n)],
        name=name or f"{group.name}⋉{n}",
    )


def translation_action(group: FiniteGroupoid) -> List[List[int]]:
    """群在自身上的左平移作用表。"""
    return [[group.compose(g, x) for x in group.arrows] for g in group.arrows]


def band_groupoid(n: int, group: FiniteGroupoid) -> FiniteGroupoid:
    """
    带状群胚 X × H × X：箭头 (x, h, y) 从 x 到 y，
    编号 (x·|H| + h)·n + y，复合 (y, k, z)∘(x, h, y) = (x, k·h, z)。
    """
    if n < 1:
        raise MalformedInputError("band_groupoid 需要至少一个对象")
    if group.n_objects != 1:
        raise MalformedInputError("band_groupoid 的第二个参数必须是群")
    order = group.n_arrows

    def unpack(a: int) -> Tuple[int, int, int]:
        xh, y = divmod(a, n)
        x, h = divmod(xh, order)
        return x, h, y

    def pack(x: int, h: int, y: int) -> int:
        return (x * order + h) * n + y

    total = n * order * n
    endpoints = []
    names = []
    inverse = []
    for a in range(total):
        x, h, y = unpack(a)
        endpoints.append((x, y))
        names.append(f"({x},{group.arrow_names[h]},{y})")
        inverse.append(pack(y, group.inverse[h], x))

    def rule(g: int, f: int) -> int:
        _, k, z = unpack(g)
        x, h, _ = unpack(f)
        return pack(x, group.compose(k, h), z)

    e = group.identity[0]
    return _build(n, endpoints, rule, [pack(x, e, x) for x in range(n)], inverse, arrow_names=names, name=f"band({n},{group.name})")


def disjoint_union(g1: FiniteGroupoid, g2: FiniteGroupoid) -> FiniteGroupoid:
    """不交并，g2 的对象和箭头编号整体平移。"""
    n1, m1 = g1.n_objects, g1.n_arrows
    compose = dict(g1.compose_table)
    for (a, b), ab in g2.compose_table.items():
        compose[(a + m1, b + m1)] = ab + m1
    return FiniteGroupoid(
        n1 + g2.n_objects,
        g1.src + [s + n1 for s in g2.src],
        g1.tgt + [t + n1 for t in g2.tgt],
        g1.identity + [i + m1 for i in g2.identity],
        g1.inverse + [i + m1 for i in g2.inverse],
        compose,
        [f"L{o}" for o in g1.object_names] + [f"R{o}" for o in g2.object_names],
        [f"L{a}" for a in g1.arrow_names] + [f"R{a}" for a in g2.arrow_names],
        f"{g1.name}⊔{g2.name}",
    )


def induced_groupoid(h: FiniteGroupoid, u: Sequence[int]) -> Tuple[FiniteGroupoid, GroupoidMorphism]:
    """
    沿映射 u: P → h.objects 诱导的群胚 P ×ᵤ H₁ ×ᵤ P。

    箭头 (p, g, q) 满足 u(p) = s(g)、u(q) = t(g)，从 p 到 q。

    Args:
        h: 原群胚
        u: 有限集 P 到 h 对象的映射

    Returns:
        (诱导群胚, 到 h 的态射 (pr₂, u))
    """
    if not u:
        raise MalformedInputError("诱导群胚需要非空的点集")
    for v in u:
        if not 0 <= v < h.n_objects:
            raise MalformedInputError(f"u 的值 {v} 不是对象")
    triples = []
    for p, up in enumerate(u):
        for q, uq in enumerate(u):
            for g in h.hom(up, uq):
                triples.append((p, g, q))
    index = {t: i for i, t in enumerate(triples)}

    def rule(a: int, b: int) -> int:
        _, g2, r = triples[a]
        p, g1, _ = triples[b]
        return index[(p, h.compose(g2, g1), r)]

    induced = _build(
        len(u),
        [(p, q) for p, _, q in triples],
        rule,
        [index[(p, h.identity[up], p)] for p, up in enumerate(u)],
        [index[(q, h.inverse[g], p)] for p, g, q in triples],
        arrow_names=[f"({p},{h.arrow_names[g]},{q})" for p, g, q in triples],
        name=f"induced({h.name})",
    )
    morphism = GroupoidMorphism(induced, h, list(u), [g for _, g, _ in triples])
    return induced, morphism


# ========================
# 结构查询
# ========================

def connected_components(g: FiniteGroupoid) -> Tuple[List[List[int]], List[FiniteGroupoid]]:
    """
    连通分支。

    Returns:
        (按最小对象排序的对象划分, 每个分支对应的子群胚)
    """
    parent = list(g.objects)

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in g.arrows:
        rs, rt = find(g.src[a]), find(g.tgt[a])
        if rs != rt:
            parent[max(rs, rt)] = min(rs, rt)
    blocks: Dict[int, List[int]] = {}
    for x in g.objects:
        blocks.setdefault(find(x), []).append(x)
    partition = [blocks[r] for r in sorted(blocks)]
    subgroupoids = []
    for block in partition:
        members = set(block)
        sub, _ = sub_groupoid(g, [a for a in g.arrows if g.src[a] in members])
        subgroupoids.append(sub)
    return partition, subgroupoids


def component_of(g: FiniteGroupoid, x: int) -> List[int]:
    partition, _ = connected_components(g)
    return next(block for block in partition if x in block)


def is_transitive(g: FiniteGroupoid) -> bool:
    return all(g.hom(x, y) for x in g.objects for y in g.objects)


def sub_groupoid(g: FiniteGroupoid, arrows: Sequence[int]) -> Tuple[FiniteGroupoid, GroupoidMorphism]:
    """
    由一组对复合与取逆封闭的箭头给出的子群胚。

    Returns:
        (子群胚, 包含态射)

    Raises:
        MalformedInputError: 箭头集不封闭
    """
    chosen = sorted(set(arrows))
    if not chosen:
        raise MalformedInputError("子群胚的箭头集不能为空")
    members = set(chosen)
    objects = sorted({g.src[a] for a in chosen} | {g.tgt[a] for a in chosen})
    obj_index = {x: i for i, x in enumerate(objects)}
    arr_index = {a: i for i, a in enumerate(chosen)}
    for x in objects:
        if g.identity[x] not in members:
            raise MalformedInputError(f"子群胚缺少对象 {x} 的单位箭头")
    for a in chosen:
        if g.inverse[a] not in members:
            raise MalformedInputError(f"子群胚对取逆不封闭: {a}")
    compose = {}
    for a in chosen:
        for b in chosen:
            ab = g.compose(a, b)
            if ab is None:
                continue
            if ab not in members:
                raise MalformedInputError(f"子群胚对复合不封闭: ({a}, {b})")
            compose[(arr_index[a], arr_index[b])] = arr_index[ab]
    sub = FiniteGroupoid(
        len(objects),
        [obj_index[g.src[a]] for a in chosen],
        [obj_index[g.tgt[a]] for a in chosen],
        [arr_index[g.identity[x]] for x in objects],
        [arr_index[g.inverse[a]] for a in chosen],
        compose,
        [g.object_names[x] for x in objects],
        [g.arrow_names[a] for a in chosen],
        f"sub({g.name})",
    )
    return sub, GroupoidMorphism(sub, g, objects, chosen)


def isotropy_group(g: FiniteGroupoid, x: int) -> FiniteGroupoid:
    """对象 x 处的迷向群 Gₓ，箭头按原编号顺序排列。"""
    if not 0 <= x < g.n_objects:
        raise MalformedInputError(f"对象 {x} 不存在")
    group, _ = sub_groupoid(g, g.loops(x))
    group.name = f"{g.name}_{x}" if g.name else f"G_{x}"
    return group


def isotropy_groupoid(g: FiniteGroupoid) -> Tuple[FiniteGroupoid, GroupoidMorphism]:
    """所有自环组成的迷向群胚 𝒢ⁱ 及其包含态射。"""
    sub, inclusion = sub_groupoid(g, [a for a in g.arrows if g.is_loop(a)])
    sub.name = f"{g.name}^i"
    return sub, inclusion


def canonical_arrows(g: FiniteGroupoid, base: int) -> Dict[int, int]:
    """
    base 所在分支中，每个对象 y 到 base 的规范箭头 τ_y（编号最小者），τ_base 为单位箭头。
    """
    tau = {}
    for y in component_of(g, base):
        tau[y] = g.identity[base] if y == base else g.hom(y, base)[0]
    return tau


def generating_arrows(g: FiniteGroupoid) -> List[int]:
    """
    按编号贪心选取的生成箭头集，连同单位箭头在复合下生成所有箭头。
    """
    generated = set(g.identity)
    generators: List[int] = []
    for a in g.arrows:
        if a in generated:
            continue
        generators.append(a)
        generated = _closure(g, generated | {a})
    return generators


def _closure(g: FiniteGroupoid, arrows: set) -> set:
    closed = set(arrows)
    frontier = list(closed)
    while frontier:
        new = []
        for a in frontier:
            inv = g.inverse[a]
            if inv not in closed:
                closed.add(inv)
                new.append(inv)
            for b in list(closed):
                for c in (g.compose(a, b), g.compose(b, a)):
                    if c is not None and c not in closed:
                        closed.add(c)
                        new.append(c)
        frontier = new
    return closed


# ========================
# 态射
# ========================

def validate_morphism(phi: GroupoidMorphism) -> CheckReport:
    """检查态射是否保持源、靶、单位和复合。"""
    report = CheckReport("groupoid morphism")
    g, k = phi.domain, phi.codomain
    om, am = phi.object_map, phi.arrow_map
    for a in g.arrows:
        b = am[a]
        if k.src[b] != om[g.src[a]] or k.tgt[b] != om[g.tgt[a]]:
            report.add("preserves_endpoints", (a, b))
    for x in g.objects:
        if am[g.identity[x]] != k.identity[om[x]]:
            report.add("preserves_identity", (x,))
    for (a, b), ab in sorted(g.compose_table.items()):
        if k.compose(am[a], am[b]) != am[ab]:
            report.add("preserves_composition", (a, b))
    return report


def _extend(g: FiniteGroupoid, k: FiniteGroupoid, object_map: Sequence[int], seed: Dict[int, int]) -> Optional[List[int]]:
    """把生成元上的取值沿复合和取逆传播到所有箭头，出现矛盾时返回 None。"""
    amap = dict(seed)
    for x in g.objects:
        amap[g.identity[x]] = k.identity[object_map[x]]
    changed = True
    while changed:
        changed = False
        known = sorted(amap)
        for a in known:
            inv = g.inverse[a]
            image = k.inverse[amap[a]]
            if inv in amap:
                if amap[inv] != image:
                    return None
            else:
                amap[inv] = image
                changed = True
            for b in known:
                ab = g.compose(a, b)
                if ab is None:
                    continue
                image = k.compose(amap[a], amap[b])
                if image is None:
                    return None
                if ab in amap:
                    if amap[ab] != image:
                        return None
                else:
                    amap[ab] = image
                    changed = True
    if len(amap) != g.n_arrows:
        return None
    return [amap[a] for a in g.arrows]


def _iter_morphisms(g: FiniteGroupoid, k: FiniteGroupoid, object_maps: Iterator[Sequence[int]]) -> Iterator[GroupoidMorphism]:
    generators = generating_arrows(g)
    for object_map in object_maps:
        choices = [k.hom(object_map[g.src[a]], object_map[g.tgt[a]]) for a in generators]
        for images in itertools.product(*choices):
            arrow_map = _extend(g, k, object_map, dict(zip(generators, images)))
            if arrow_map is None:
                continue
            phi = GroupoidMorphism(g, k, list(object_map), arrow_map)
            if validate_morphism(phi).ok:
                yield phi


def enumerate_morphisms(g: FiniteGroupoid, k: FiniteGroupoid, guard: int = 10) -> List[GroupoidMorphism]:
    """
    枚举所有函子 g → k，顺序确定（对象映射字典序，再按生成元取值字典序）。

    Args:
        g: 定义域
        k: 陪域
        guard: g 的箭头数上限

    Raises:
        GuardExceededError: g 的箭头数超过上限
    """
    if g.n_arrows > guard:
        raise GuardExceededError(f"定义域有 {g.n_arrows} 个箭头，超过枚举上限 {guard}")
    object_maps = itertools.product(range(k.n_objects), repeat=g.n_objects)
    morphisms = list(_iter_morphisms(g, k, object_maps))
    logger.debug("枚举 %s → %s 的态射: %d 个", g.name, k.name, len(morphisms))
    return morphisms


def find_isomorphism(g: FiniteGroupoid, k: FiniteGroupoid, guard: int = 10) -> Optional[GroupoidMorphism]:
    """寻找一个群胚同构，不存在时返回 None。"""
    if g.n_objects != k.n_objects or g.n_arrows != k.n_arrows:
        return None
    if g.n_arrows > guard:
        raise GuardExceededError(f"定义域有 {g.n_arrows} 个箭头，超过枚举上限 {guard}")
    for phi in _iter_morphisms(g, k, itertools.permutations(range(k.n_objects))):
        if phi.is_bijective():
            return phi
    return None


def diagonal_embedding(n: int) -> GroupoidMorphism:
    """对角嵌入 𝒰(X) ↪ 𝒱(X)。"""
    return GroupoidMorphism(unit_groupoid(n), pair_groupoid(n), list(range(n)), [x * n + x for x in range(n)])


def action_projection(group: FiniteGroupoid, action: Sequence[Sequence[int]], points: int) -> GroupoidMorphism:
    """投影 pr: G ⋉ X → G，(g, x) ↦ g。"""
    source = action_groupoid(group, action, points)
    return GroupoidMorphism(source, group, [0] * points, [a // points for a in source.arrows])


def band_automorphism(n: int, group: FiniteGroupoid, permutation: Sequence[int]) -> GroupoidMorphism:
    """带状群胚上由对象置换诱导的自同构 (x, h, y) ↦ (π x, h, π y)。"""
    if sorted(permutation) != list(range(n)):
        raise MalformedInputError(f"{list(permutation)} 不是 {n} 个对象的置换")
    band = band_groupoid(n, group)
    order = group.n_arrows
    arrow_map = []
    for a in band.arrows:
        xh, y = divmod(a, n)
        x, h = divmod(xh, order)
        arrow_map.append((permutation[x] * order + h) * n + permutation[y])
    return GroupoidMorphism(band, band, list(permutation), arrow_map)


# ========================
# 语料与存储
# ========================

def build_from_recipe(recipe: Dict, storage: Optional[JsonStorage] = None, known: Optional[Dict[str, FiniteGroupoid]] = None) -> FiniteGroupoid:
    """
    按语料配方构造群胚。

    Args:
        recipe: {"name", "builder", ...参数}
        storage: 读取 "file" 配方时使用的存储
        known: 已经构造好的语料，供 disjoint_union 按名称引用

    Returns:
        构造出的群胚
    """
    known = known or {}
    builder = recipe.get("builder")

    def group_param(value) -> FiniteGroupoid:
        if isinstance(value, dict):
            return build_from_recipe(value, storage, known)
        if isinstance(value, str) and value in known:
            return known[value]
        if isinstance(value, int):
            return cyclic_group(value)
        raise MalformedInputError(f"无法解析群参数: {value!r}")

    if builder == "unit":
        g = unit_groupoid(int(recipe["n"]))
    elif builder == "pair":
        g = pair_groupoid(int(recipe["n"]))
    elif builder == "cyclic":
        g = cyclic_group(int(recipe["n"]))
    elif builder == "permutation_group":
        g = permutation_group(recipe["generators"], recipe.get("name", ""))
    elif builder == "band":
        g = band_groupoid(int(recipe["n"]), group_param(recipe["group"]))
    elif builder == "action":
        group = group_param(recipe["group"])
        action = recipe.get("action", "translation")
        if action == "translation":
            g = action_groupoid(group, translation_action(group), group.n_arrows)
        else:
            g = action_groupoid(group, action, int(recipe["points"]))
    elif builder == "disjoint_union":
        g = disjoint_union(group_param(recipe["left"]), group_param(recipe["right"]))
    elif builder == "file":
        if storage is None:
            raise MalformedInputError("file 配方需要存储目录")
        g = FiniteGroupoid.from_dict(storage.load("groupoids", recipe["file"]))
    else:
        raise MalformedInputError(f"未知的构造器: {builder!r}")
    if recipe.get("name"):
        g.name = recipe["name"]
    return g


def load_corpus(path: str, storage: Optional[JsonStorage] = None) -> List[Tuple[str, FiniteGroupoid]]:
    """
    读取语料配方文件，按文件中的顺序返回 (名称, 群胚)。

    Raises:
        MalformedInputError: 文件不是配方列表
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise MalformedInputError(f"无法读取语料文件 {path}: {e}")
    entries = data.get("corpus") if isinstance(data, dict) else data
    if not isinstance(entries, list):
        raise MalformedInputError("语料文件必须包含配方列表")
    known: Dict[str, FiniteGroupoid] = {}
    corpus = []
    for recipe in entries:
        g = build_from_recipe(recipe, storage, known)
        known[recipe["name"]] = g
        if not recipe.get("helper", False):
            corpus.append((recipe["name"], g))
    return corpus


class GroupoidTools:
    """群胚工具类，负责群胚文件的读写。"""

    def __init__(self, storage: JsonStorage):
        """
        初始化群胚工具。

        Args:
            storage: 数据存储对象
        """
        self.storage = storage

    def load_groupoid(self, name: str) -> FiniteGroupoid:
        """
        读取群胚文件。

        Raises:
            FileNotFoundError: 找不到文件
            MalformedInputError: 文件结构错误
        """
        return FiniteGroupoid.from_dict(self.storage.load("groupoids", name))

    def save_groupoid(self, g: FiniteGroupoid, name: Optional[str] = None) -> str:
        return self.storage.save(g.to_dict(), "groupoids", name or g.name)

    def list_groupoids(self) -> List[str]:
        return [item["id"] for item in self.storage.list("groupoids")]
