"""
群胚与分裂 Hopf 代数胚之间的对偶：Θ、𝓕、Ω、三角恒等式和 hom 集双射。
"""

from groupoid_duality.duality.comodules import comodule_from_rep, f_functor, reconstruction_check
from groupoid_duality.duality.omega import omega, omega_naturality, omega_oracle
from groupoid_duality.duality.round_trip import round_trip
from groupoid_duality.duality.theta import theta, theta_naturality
from groupoid_duality.duality.triangles import duality_bijection_check, triangle_one, triangle_two

__all__ = [
    "comodule_from_rep",
    "f_functor",
    "reconstruction_check",
    "omega",
    "omega_naturality",
    "omega_oracle",
    "round_trip",
    "theta",
    "theta_naturality",
    "duality_bijection_check",
    "triangle_one",
    "triangle_two",
]
