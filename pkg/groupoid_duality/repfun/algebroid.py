"""
ℛₖ(𝒢) 的完整打包：具体模型、生成族、余端模型和 ζ。
"""

from typing import Any, Dict, List, Optional, Tuple

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.algebra.matrix import Matrix
from groupoid_duality.log import get_logger
from groupoid_duality.models.groupoid import FiniteGroupoid
from groupoid_duality.models.hopf import HopfAlgebroid
from groupoid_duality.models.report import CheckReport
from groupoid_duality.models.representation import Representation
from groupoid_duality.repfun.coend import CoendModel, compare_with_concrete, coend_from_family, zeta
from groupoid_duality.repfun.concrete import gt_check, repfun_concrete
from groupoid_duality.tools.hopf_tools import check_hopf_axioms
from groupoid_duality.tools.representation_tools import spanning_family

logger = get_logger(__name__)


class RepFunAlgebroid:
    """代表函数 Hopf 代数胚 ℛₖ(𝒢) 的两个模型以及连接它们的 ζ。"""

    def __init__(
        self,
        groupoid: FiniteGroupoid,
        field: FieldSpec,
        concrete: HopfAlgebroid,
        family: List[Representation],
        coend: CoendModel,
        zeta: Matrix,
    ):
        self.groupoid = groupoid
        self.field = field
        self.concrete = concrete
        self.family = family
        self.coend = coend
        self.zeta = zeta

    @property
    def dimension(self) -> int:
        return self.concrete.dimension

    def to_dict(self) -> Dict[str, Any]:
        data = self.concrete.to_dict()
        data["family"] = [r.name for r in self.family]
        data["coend"] = self.coend.to_dict()
        return data

    def get_summary(self) -> str:
        """
        获取摘要。

        Returns:
            具体模型与余端模型的维数
        """
        return (
            f"{self.concrete.name}: 总维数 {self.dimension}，底维数 {self.concrete.base_dimension}，"
            f"余端维数 {self.coend.dimension}（族大小 {len(self.coend.family)}）"
        )

    def __repr__(self) -> str:
        return f"RepFunAlgebroid({self.groupoid.name!r}, dim={self.dimension})"


def build_repfun(
    g: FiniteGroupoid,
    field: FieldSpec,
    depth: int = 2,
    max_rank: int = 16,
    seed: int = 0,
    samples: int = 100,
    family: Optional[List[Representation]] = None,
) -> Tuple[RepFunAlgebroid, CheckReport]:
    """
    构造 ℛₖ(𝒢) 并做全部检查：Hopf 公理、ζ 的性质、两个模型的一致性和几何传递性。

    Args:
        g: 有限群胚
        field: 基域
        depth: 张量闭包深度
        max_rank: 加入族的张量积的最大秩
        seed: 随机种子
        samples: ζ 的随机样本数
        family: 生成族，默认为 spanning_family(g)

    Returns:
        (RepFunAlgebroid, 报告)
    """
    concrete = repfun_concrete(g, field)
    if family is None:
        family = spanning_family(g, field)
    model = coend_from_family(g, family, depth, max_rank, field)
    z, zeta_report = zeta(model, seed, samples)
    repfun = RepFunAlgebroid(g, field, concrete, list(family), model, z)

    report = CheckReport(f"repfun {g.name}")
    report.merge(check_hopf_axioms(concrete), "concrete.")
    report.merge(zeta_report, "zeta.")
    report.merge(compare_with_concrete(model, concrete), "coend.")
    gt = gt_check(repfun)
    report.merge(gt, "gt.")
    report.details = {
        "dimension": concrete.dimension,
        "arrows": g.n_arrows,
        "coend_dimension": model.dimension,
        "family": [r.name for r in model.family],
        "closure_embedded": [list(pair) for pair in model.closure_embedded],
        "skipped_products": [[model.family[a].name, model.family[b].name] for a, b in model.skipped_products],
        "zeta": zeta_report.details,
        "gt": gt.details,
    }
    logger.info(
        "%s 的 ℛₖ: 维数 %d，余端维数 %d，%d 个张量积经缠绕算子写回族",
        g.name, concrete.dimension, model.dimension, len(model.embedded_products),
    )
    if model.skipped_products:
        report.add("product_closure", model.skipped_products[0], "有张量积既不在族中也无法写回族")
    return repfun, report
