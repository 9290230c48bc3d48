"""Exact computer algebra for finite free algebras.

The package computes generic characteristic polynomials of finite free
algebras given by structure constants, certifies injectivity of the
evaluation map X -> generic element through power-matrix determinants,
decides local simplicity through fiber decomposition over finite fields, and
verifies the classical prime-splitting and discriminant identities on
monogenic number rings.
"""

from .algebra import (
    AlgebraElement,
    AlgebraMorphism,
    FiniteFreeAlgebra,
    base_change,
    biquadratic,
    change_basis,
    charpoly_elt,
    diagonal,
    from_monogenic,
    mul_matrix,
    norm,
    product,
    specialize_base,
    tensor,
    trace,
)
from .errors import BudgetExceededError, InvalidInputError, SchemaError
from .fibers import (
    ComaximalReport,
    FiberVerdict,
    GeneratorSearch,
    LocalFactorReport,
    SimplicityReport,
    comaximal_shift,
    fiber_verdict,
    find_generator,
    generator_tower,
    local_factors,
    locally_simple,
    locally_simple_at,
    radical,
    sampled_points_verdicts,
    vandermonde_check,
)
from .generic import (
    GenericCharPoly,
    ParameterMap,
    ParameterRing,
    gcp,
    generic_element,
    parameter_map,
    parameter_ring,
    specialize,
    verify_functoriality,
)
from .hilbert import (
    SplittingData,
    splitting_data,
    suite_verdict,
    theorem33_check,
    theorem34_check,
    theorem35_check,
    zahlbericht_suite,
)
from .kronecker import (
    InjectivityCertificate,
    PowerMatrix,
    SmokeReport,
    injectivity_certificate,
    irreducibility_smoke,
    norm_form,
    norm_gcp_relation,
    power_matrix,
)
from .report import VerificationReport, algebra_fingerprint
from .ringkit import GF, QQ, ZZ, MultiPoly, PolyMatrix, UniPoly, XPoly

__version__ = "0.1.0"
