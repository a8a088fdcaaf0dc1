"""curvejac: exact Jacobian toolkit for rational curves on hypersurfaces.

Builds the incidence equations of parametrized rational curves lying on a
hypersurface, their Jacobian in coefficient and evaluation form, and runs the
block-decomposition verification for the special quintic l*q + z4*p through a
curve on a quartic surface.  All core arithmetic is exact over the rationals;
a complex floating path with tolerance-based rank covers irrational
evaluation points.
"""

from .construction import (
    BlockSet,
    Fixture,
    SpecialPoints,
    VerificationReport,
    a11_closed_form,
    a22_closed_form,
    block_decompose,
    build_special_hypersurface,
    gradient_pairing_map,
    select_special_points,
    smooth_along_curve,
    verify_construction,
)
from .errors import DimensionError, InputError
from .incidence import (
    CurveParam,
    IncidenceProblem,
    JacobianMatrix,
    MembershipReport,
    TangentDim,
    coefficients_k,
    jacobian_coefficient_form,
    jacobian_evaluation_form,
    lies_on,
    membership_checks,
    quintics_through_curve,
    random_member,
    symmetry_kernel_vectors,
    tangent_dim,
)
from .linalg import (
    ComplexMatrix,
    KernelBasis,
    RationalMatrix,
    det_exact,
    kernel_exact,
    rank_exact,
    rank_numeric,
    vandermonde,
)
from .poly import (
    MultiPoly,
    UniPoly,
    compose_with_curve,
    gcd_univariate,
    monomial_basis,
    rational_roots,
    roots_numeric,
)

__version__ = "0.1.0"
