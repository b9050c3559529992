"""
异常层次结构。

所有库异常都派生自 DualityError（它本身是 ValueError），
公理校验失败不抛异常，而是通过 CheckReport 返回。
"""

from typing import Any, Dict, List, Optional


class DualityError(ValueError):
    """库内所有异常的基类。"""

    exit_code = 5


class MalformedInputError(DualityError):
    """输入数据格式错误：悬空编号、空对象集、维数不匹配、JSON 结构错误。"""

    exit_code = 2


class FieldMismatchError(DualityError):
    """不同基域的标量或矩阵混用。"""


class SingularMatrixError(DualityError):
    """矩阵不可逆（不是线性同构）。"""


class RankMismatchError(DualityError):
    """违反常秩条件。"""

    def __init__(self, message: str, ranks: Optional[Dict[Any, int]] = None):
        """
        初始化常秩异常。

        Args:
            message: 错误信息
            ranks: 每个对象上的秩，用于报告
        """
        super().__init__(message)
        self.ranks = dict(ranks or {})


class GradingError(DualityError):
    """双模的基不是齐次的，无法按幂等元对分次。"""


class NonTransitiveError(DualityError):
    """输入群胚不是传递的。"""

    def __init__(self, message: str, components: Optional[List[List[int]]] = None):
        super().__init__(message)
        self.components = [list(c) for c in (components or [])]


class GuardExceededError(DualityError):
    """超出枚举或暴力搜索的规模上限。"""

    exit_code = 3


class UnsupportedCharactersError(DualityError):
    """无法计算特征标（有理数域上缺少分裂见证）。"""

    exit_code = 4
