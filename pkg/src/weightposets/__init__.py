"""Weight posets Delta(1) of Z-gradings of simple Lie algebras, their antichains and rowmotion."""

from .grading import WeightPoset, ZGrading, abelian_gradings, extra_special_grading, make_grading, one_standard_gradings
from .polynomial import IntPoly
from .poset import (
    EnumerationCapExceeded,
    FinitePoset,
    boolean_algebra,
    chain_product,
    m_polynomial,
    macmahon,
    n_polynomial,
    poset_isomorphic,
    product_formula,
)
from .rootsys import RootSystem, SimpleType, build
from .rowmotion import OrbitReport, orbits

__version__ = "0.1.0"

__all__ = [
    "EnumerationCapExceeded",
    "FinitePoset",
    "IntPoly",
    "OrbitReport",
    "RootSystem",
    "SimpleType",
    "WeightPoset",
    "ZGrading",
    "abelian_gradings",
    "boolean_algebra",
    "build",
    "chain_product",
    "extra_special_grading",
    "m_polynomial",
    "macmahon",
    "make_grading",
    "n_polynomial",
    "one_standard_gradings",
    "orbits",
    "poset_isomorphic",
    "product_formula",
]
