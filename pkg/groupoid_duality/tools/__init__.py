"""
工具模块，提供群胚、表示和 Hopf 代数胚的构造、校验与读写。
"""

from groupoid_duality.tools.groupoid_tools import GroupoidTools
from groupoid_duality.tools.representation_tools import RepresentationTools
from groupoid_duality.tools.hopf_tools import HopfTools

__all__ = ["GroupoidTools", "RepresentationTools", "HopfTools"]
