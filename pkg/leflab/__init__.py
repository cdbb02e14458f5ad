"""
Non-Lefschetz Locus Module

Exact computation of the locus of linear forms that fail to be weak
Lefschetz elements of a graded artinian algebra, together with the closed
forms that predict it.

Main Components:
- GradedAlgebra: artinian quotients R/I with graded bases and multiplication maps
- non_lefschetz_locus: minor ideals of the dual matrices and their Groebner bases
- has_wlp / jordan_type: pointwise Lefschetz tests and Jordan types
- predict: closed-form dimension and degree of the locus
"""

from .artinian import GradedAlgebra, HVector, LinearForm, monomial_ci, random_ci
from .exactfield import FieldSpec
from .lefjordan import Partition, has_wlp, jordan_type
from .locus import NonLefschetzLocus, non_lefschetz_locus
from .predict import Prediction

__version__ = "1.0.0"
__author__ = "Lefschetz Locus Research Team"

__all__ = [
    "FieldSpec",
    "GradedAlgebra",
    "HVector",
    "LinearForm",
    "NonLefschetzLocus",
    "Partition",
    "Prediction",
    "has_wlp",
    "jordan_type",
    "monomial_ci",
    "non_lefschetz_locus",
    "random_ci",
]
