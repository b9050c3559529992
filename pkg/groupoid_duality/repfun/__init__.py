"""
代表函数 Hopf 代数胚 ℛₖ(𝒢)：具体模型、余端模型、函子性与分解。
"""

from groupoid_duality.repfun.algebroid import RepFunAlgebroid, build_repfun
from groupoid_duality.repfun.coend import CoendModel, coend_from_family, spanning_coend, zeta
from groupoid_duality.repfun.concrete import function_hopf_algebra, gt_check, repfun_concrete
from groupoid_duality.repfun.decomposition import transitive_decomposition_iso
from groupoid_duality.repfun.functor import functoriality_check, repfun_on_morphism
from groupoid_duality.repfun.isotropy import isotropy_conjugation_iso, isotropy_hopf_algebra, isotropy_quotient

__all__ = [
    "RepFunAlgebroid",
    "build_repfun",
    "CoendModel",
    "coend_from_family",
    "spanning_coend",
    "zeta",
    "function_hopf_algebra",
    "gt_check",
    "repfun_concrete",
    "transitive_decomposition_iso",
    "functoriality_check",
    "repfun_on_morphism",
    "isotropy_conjugation_iso",
    "isotropy_hopf_algebra",
    "isotropy_quotient",
]
