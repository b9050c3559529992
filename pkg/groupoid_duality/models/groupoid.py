"""
有限群胚数据模型模块，定义群胚的表结构和群胚之间的态射。

对象和箭头都使用从 0 开始的稠密编号，名称只在读写文件时使用。
复合约定：compose(g, f) 表示“先 f 后 g”，当且仅当 src(g) == tgt(f) 时有定义。
"""

from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

from groupoid_duality.errors import MalformedInputError


class FiniteGroupoid:
    """有限群胚，由对象、箭头、复合表、单位表和逆表给出。"""

    def __init__(
        self,
        n_objects: int,
        src: Sequence[int],
        tgt: Sequence[int],
        identity: Sequence[int],
        inverse: Sequence[int],
        compose: Dict[Tuple[int, int], int],
        object_names: Optional[Sequence[str]] = None,
        arrow_names: Optional[Sequence[str]] = None,
        name: str = "",
    ):
        """
        初始化群胚。构造时只检查表的形状和编号是否越界，
        群胚公理由 validate_groupoid 检查。

        Args:
            n_objects: 对象个数，必须至少为 1
            src: 每个箭头的源
            tgt: 每个箭头的靶
            identity: 每个对象的单位箭头
            inverse: 每个箭头的逆
            compose: 复合表 (g, f) -> g∘f
            object_names: 对象名称
            arrow_names: 箭头名称
            name: 群胚名称

        Raises:
            MalformedInputError: 对象集为空或存在悬空编号
        """
        if n_objects < 1:
            raise MalformedInputError("群胚的对象集不能为空")
        m = len(src)
        if len(tgt) != m or len(inverse) != m:
            raise MalformedInputError("src、tgt、inverse 表的长度不一致")
        if len(identity) != n_objects:
            raise MalformedInputError("identity 表必须覆盖所有对象")
        for table, bound, label in ((src, n_objects, "src"), (tgt, n_objects, "tgt"), (identity, m, "identity"), (inverse, m, "inverse")):
            for i, v in enumerate(table):
                if not isinstance(v, int) or not 0 <= v < bound:
                    raise MalformedInputError(f"{label}[{i}] = {v!r} 是悬空编号")
        for (g, f), gf in compose.items():
            if not (0 <= g < m and 0 <= f < m and isinstance(gf, int) and 0 <= gf < m):
                raise MalformedInputError(f"复合表条目 ({g}, {f}) -> {gf} 含悬空编号")

        self.n_objects = n_objects
        self.src = list(src)
        self.tgt = list(tgt)
        self.identity = list(identity)
        self.inverse = list(inverse)
        self.compose_table = dict(compose)
        self.object_names = list(object_names) if object_names else [str(x) for x in range(n_objects)]
        self.arrow_names = list(arrow_names) if arrow_names else [f"a{i}" for i in range(m)]
        self.name = name
        if len(self.object_names) != n_objects or len(self.arrow_names) != m:
            raise MalformedInputError("名称表长度与对象数或箭头数不一致")

    @property
    def n_arrows(self) -> int:
        return len(self.src)

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    @property
    def arrows(self) -> range:
        return range(self.n_arrows)

    def compose(self, g: int, f: int) -> Optional[int]:
        """返回 g∘f，不可复合时返回 None。"""
        return self.compose_table.get((g, f))

    def is_identity(self, a: int) -> bool:
        return self.identity[self.src[a]] == a

    def is_loop(self, a: int) -> bool:
        return self.src[a] == self.tgt[a]

    @cached_property
    def hom_table(self) -> Dict[Tuple[int, int], List[int]]:
        """(x, y) -> 从 x 到 y 的箭头，按编号升序。"""
        table: Dict[Tuple[int, int], List[int]] = {}
        for a in self.arrows:
            table.setdefault((self.src[a], self.tgt[a]), []).append(a)
        return table

    def hom(self, x: int, y: int) -> List[int]:
        """从 x 到 y 的箭头。"""
        return self.hom_table.get((x, y), [])

    def loops(self, x: int) -> List[int]:
        return self.hom(x, x)

    @cached_property
    def _incoming(self) -> Dict[int, List[int]]:
        incoming: Dict[int, List[int]] = {}
        for f in self.arrows:
            incoming.setdefault(self.tgt[f], []).append(f)
        return incoming

    def arrows_into(self, x: int) -> List[int]:
        """靶为 x 的箭头。"""
        return self._incoming.get(x, [])

    @cached_property
    def composable_pairs(self) -> List[Tuple[int, int]]:
        """所有满足 src(g) == tgt(f) 的 (g, f)，按 (g, f) 字典序。"""
        return [(g, f) for g in self.arrows for f in self.arrows_into(self.src[g])]

    def arrow_index(self, name: str) -> int:
        try:
            return self.arrow_names.index(name)
        except ValueError:
            raise MalformedInputError(f"未知箭头: {name!r}")

    def object_index(self, name: str) -> int:
        try:
            return self.object_names.index(name)
        except ValueError:
            raise MalformedInputError(f"未知对象: {name!r}")

    def with_compose(self, compose: Dict[Tuple[int, int], int]) -> "FiniteGroupoid":
        """返回替换复合表后的副本，用于构造变异样例。"""
        return FiniteGroupoid(
            self.n_objects, self.src, self.tgt, self.identity, self.inverse, compose,
            self.object_names, self.arrow_names, self.name,
        )

    def to_dict(self) -> Dict[str, Any]:
        """
        将群胚转换为文件格式的字典。

        Returns:
            {"objects", "arrows", "compose", "identity", "inverse"} 结构
        """
        on = self.object_names
        an = self.arrow_names
        return {
            "name": self.name,
            "objects": list(on),
            "arrows": [{"id": an[a], "src": on[self.src[a]], "tgt": on[self.tgt[a]]} for a in self.arrows],
            "compose": [[an[g], an[f], an[gf]] for (g, f), gf in sorted(self.compose_table.items())],
            "identity": {on[x]: an[self.identity[x]] for x in self.objects},
            "inverse": {an[a]: an[self.inverse[a]] for a in self.arrows},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FiniteGroupoid":
        """
        从文件格式的字典创建群胚，名称映射到稠密编号。

        Args:
            data: 群胚字典

        Returns:
            创建的群胚

        Raises:
            MalformedInputError: 结构错误或名称悬空
        """
        try:
            object_names = [str(o) for o in data["objects"]]
            arrows = data["arrows"]
            objects = {name: i for i, name in enumerate(object_names)}
            arrow_names = [str(a["id"]) for a in arrows]
            ids = {name: i for i, name in enumerate(arrow_names)}
            if len(objects) != len(object_names) or len(ids) != len(arrow_names):
                raise MalformedInputError("对象或箭头名称重复")

            def obj(name: Any) -> int:
                if str(name) not in objects:
                    raise MalformedInputError(f"悬空对象名: {name!r}")
                return objects[str(name)]

            def arr(name: Any) -> int:
                if str(name) not in ids:
                    raise MalformedInputError(f"悬空箭头名: {name!r}")
                return ids[str(name)]

            src = [obj(a["src"]) for a in arrows]
            tgt = [obj(a["tgt"]) for a in arrows]
            identity_map = data["identity"]
            inverse_map = data["inverse"]
            identity = [arr(identity_map[name]) for name in object_names]
            inverse = [arr(inverse_map[name]) for name in arrow_names]
            compose: Dict[Tuple[int, int], int] = {}
            for entry in data["compose"]:
                g, f, gf = entry
                compose[(arr(g), arr(f))] = arr(gf)
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, MalformedInputError):
                raise
            raise MalformedInputError(f"群胚文件结构错误: {e!r}")
        return cls(len(object_names), src, tgt, identity, inverse, compose, object_names, arrow_names, data.get("name", ""))

    def get_summary(self) -> str:
        """
        获取群胚摘要。

        Returns:
            群胚的文本摘要
        """
        loops = sum(1 for a in self.arrows if self.is_loop(a))
        return (
            f"群胚: {self.name or '(未命名)'}\n"
            f"对象数: {self.n_objects}\n"
            f"箭头数: {self.n_arrows}（其中自环 {loops} 个）\n"
            f"可复合对数: {len(self.composable_pairs)}"
        )

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, FiniteGroupoid):
            return False
        return (
            self.n_objects == other.n_objects
            and self.src == other.src
            and self.tgt == other.tgt
            and self.identity == other.identity
            and self.inverse == other.inverse
            and self.compose_table == other.compose_table
        )

    def __hash__(self) -> int:
        return hash((self.n_objects, tuple(self.src), tuple(self.tgt), tuple(self.identity)))

    def __repr__(self) -> str:
        return f"FiniteGroupoid({self.name!r}, objects={self.n_objects}, arrows={self.n_arrows})"


class GroupoidMorphism:
    """群胚之间的态射（函子），由对象映射和箭头映射给出。"""

    def __init__(self, domain: FiniteGroupoid, codomain: FiniteGroupoid, object_map: Sequence[int], arrow_map: Sequence[int]):
        if len(object_map) != domain.n_objects or len(arrow_map) != domain.n_arrows:
            raise MalformedInputError("态射的对象映射或箭头映射不完整")
        for v in object_map:
            if not 0 <= v < codomain.n_objects:
                raise MalformedInputError(f"对象映射的值 {v} 越界")
        for v in arrow_map:
            if not 0 <= v < codomain.n_arrows:
                raise MalformedInputError(f"箭头映射的值 {v} 越界")
        self.domain = domain
        self.codomain = codomain
        self.object_map = list(object_map)
        self.arrow_map = list(arrow_map)

    @classmethod
    def identity(cls, g: FiniteGroupoid) -> "GroupoidMorphism":
        return cls(g, g, list(g.objects), list(g.arrows))

    def compose(self, other: "GroupoidMorphism") -> "GroupoidMorphism":
        """返回 self∘other（先 other 后 self）。"""
        if other.codomain != self.domain:
            raise MalformedInputError("态射不可复合：定义域与陪域不一致")
        return GroupoidMorphism(
            other.domain,
            self.codomain,
            [self.object_map[x] for x in other.object_map],
            [self.arrow_map[a] for a in other.arrow_map],
        )

    def is_bijective(self) -> bool:
        return (
            sorted(self.object_map) == list(self.codomain.objects)
            and sorted(self.arrow_map) == list(self.codomain.arrows)
        )

    def inverse(self) -> "GroupoidMorphism":
        """双射态射的逆。"""
        if not self.is_bijective():
            raise MalformedInputError("只有双射态射才有逆")
        object_map = [0] * self.codomain.n_objects
        arrow_map = [0] * self.codomain.n_arrows
        for x, y in enumerate(self.object_map):
            object_map[y] = x
        for a, b in enumerate(self.arrow_map):
            arrow_map[b] = a
        return GroupoidMorphism(self.codomain, self.domain, object_map, arrow_map)

    def same_maps(self, other: "GroupoidMorphism") -> bool:
        return self.object_map == other.object_map and self.arrow_map == other.arrow_map

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, GroupoidMorphism):
            return False
        return self.same_maps(other) and self.domain == other.domain and self.codomain == other.codomain

    def __hash__(self) -> int:
        return hash((tuple(self.object_map), tuple(self.arrow_map)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "domain": self.domain.name,
            "codomain": self.codomain.name,
            "object_map": {self.domain.object_names[x]: self.codomain.object_names[y] for x, y in enumerate(self.object_map)},
            "arrow_map": {self.domain.arrow_names[a]: self.codomain.arrow_names[b] for a, b in enumerate(self.arrow_map)},
        }

    def __repr__(self) -> str:
        return f"GroupoidMorphism(objects={self.object_map}, arrows={self.arrow_map})"
