"""Exact differential Gerstenhaber algebras of nilmanifolds with abelian complex structure."""

__version__ = "0.1.0"

from .scalars import GaussianRational, gq
from .exterior import GeneratorSet, Multivector
from .dga import DGAPresentation, differential, schouten, verify_axioms
from .nilcomplex import (
    NilComplexSpec,
    SpecError,
    SymplecticSpec,
    build_kodaira,
    complex_dga,
    symplectic_dga,
)
from .hodge import cohomology_basis, hodge_for
from .deformation import (
    closed_form_kodaira,
    frobenius_products,
    kodaira_surface_coordinates,
    kuranishi_solve,
    mc_residual,
)
from .mirror import cohomology_match, mirror_map, verify_mirror

__all__ = [
    "__version__",
    "GaussianRational",
    "gq",
    "GeneratorSet",
    "Multivector",
    "DGAPresentation",
    "differential",
    "schouten",
    "verify_axioms",
    "NilComplexSpec",
    "SpecError",
    "SymplecticSpec",
    "build_kodaira",
    "complex_dga",
    "symplectic_dga",
    "cohomology_basis",
    "hodge_for",
    "closed_form_kodaira",
    "frobenius_products",
    "kodaira_surface_coordinates",
    "kuranishi_solve",
    "mc_residual",
    "cohomology_match",
    "mirror_map",
    "verify_mirror",
]
