"""
数据模型模块，用于定义群胚、表示、Hopf 代数胚和校验报告等数据结构。
"""

from groupoid_duality.models.groupoid import FiniteGroupoid, GroupoidMorphism
from groupoid_duality.models.representation import Representation, RepMorphism, SectionsModule
from groupoid_duality.models.hopf import (
    CharacterGroupoid,
    Comodule,
    CommutativeAlgebra,
    HopfAlgebroid,
    HopfMorphism,
    SplitAlgebra,
)
from groupoid_duality.models.report import CheckReport, Violation
from groupoid_duality.models.run_config import RunConfig

__all__ = [
    "FiniteGroupoid",
    "GroupoidMorphism",
    "Representation",
    "RepMorphism",
    "SectionsModule",
    "CommutativeAlgebra",
    "SplitAlgebra",
    "HopfAlgebroid",
    "HopfMorphism",
    "Comodule",
    "CharacterGroupoid",
    "CheckReport",
    "Violation",
    "RunConfig",
]
