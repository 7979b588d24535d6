"""Rooted tree maps on Q<x,y> and the multiple zeta value relations they induce."""

from .forest import LEAF, UNIT, Forest, Tree, b_minus, b_plus, enumerate_forests, parse_forest, parse_tree
from .hopf import ForestSum, TensorSum, antipode, coproduct, counit, delta_k, natural_growth
from .mzvnum import PrecisionContext, ZValue, verify_kernel, zeta_index, zeta_poly
from .stuffle import kawashima_basis, member, stuffle
from .treemap import apply, phi, psi
from .words import DomainError, MzvIndex, Poly

__version__ = "0.1.0"

__all__ = [
    "LEAF", "UNIT", "Forest", "Tree", "b_minus", "b_plus", "enumerate_forests", "parse_forest", "parse_tree",
    "ForestSum", "TensorSum", "antipode", "coproduct", "counit", "delta_k", "natural_growth",
    "PrecisionContext", "ZValue", "verify_kernel", "zeta_index", "zeta_poly",
    "kawashima_basis", "member", "stuffle",
    "apply", "phi", "psi",
    "DomainError", "MzvIndex", "Poly",
]
