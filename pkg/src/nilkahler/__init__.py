"""Exact computations for semi-Kähler and para-Kähler structures on nilpotent Lie algebras."""

__version__ = "0.1.0"

from .algebra import LieAlgebra, catalog, catalog_names, change_basis, is_lie_algebra, jacobi_residual
from .curvature import CurvatureData, is_ricci_flat, levi_civita
from .forms import KForm, ce_differential, interior_product, power, wedge
from .hitchin import hitchin_operator, induced_structure, lambda_of
from .operators import Endomorphism, MetricTensor
from .structures import (almost_structure_check, associated_metric, is_compatible, is_integrable,
                         is_nilpotent_structure, is_semi_kahler)

__all__ = [
    "__version__", "LieAlgebra", "catalog", "catalog_names", "change_basis", "is_lie_algebra",
    "jacobi_residual", "CurvatureData", "is_ricci_flat", "levi_civita", "KForm", "ce_differential",
    "interior_product", "power", "wedge", "hitchin_operator", "induced_structure", "lambda_of",
    "Endomorphism", "MetricTensor", "almost_structure_check", "associated_metric", "is_compatible",
    "is_integrable", "is_nilpotent_structure", "is_semi_kahler",
]
