"""
精确算术模块：有理数域与素域上的标量、稀疏向量和稠密矩阵。
"""

from groupoid_duality.algebra.field import FieldSpec, Scalar
from groupoid_duality.algebra.matrix import Matrix
from groupoid_duality.algebra.linalg import (
    rref,
    rank,
    kernel_basis,
    solve_linear,
    kron,
    inverse,
    block_diagonal,
    span_basis,
    same_span,
)

__all__ = [
    "FieldSpec",
    "Scalar",
    "Matrix",
    "rref",
    "rank",
    "kernel_basis",
    "solve_linear",
    "kron",
    "inverse",
    "block_diagonal",
    "span_basis",
    "same_span",
]
