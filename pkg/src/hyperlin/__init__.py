"""Hyperbolic (split-complex) algebra, linear algebra and quantum-mechanics verification harness."""
from .algebra import (
    BUILTIN_SPECS,
    AlgebraElement,
    AlgebraSpec,
    HyperbolicNumber,
    algebra_mul,
    complex_spec,
    hy_conj,
    hy_inverse,
    hy_mul,
    hy_norm,
    hyperbolic_spec,
    light_cone_contains,
    modulus,
    multiplicativity_defect,
    octonion_spec,
    quaternion_spec,
    real_spec,
)
from .ccr import (
    CounterexamplePair,
    ComplexRational,
    FiniteSupportVector,
    commutator_apply,
    commutator_check,
    weyl_relation_check,
)
from .errors import (
    ConfigError,
    ConvergenceError,
    DimensionMismatchError,
    GridAlignmentError,
    GridMismatchError,
    HyperlinError,
    LightConeError,
    NotInDomainError,
    NotSelfAdjointError,
    SpecMismatchError,
    UnknownSuiteError,
    UnsupportedOrderError,
)
from .functions import (
    FourierResult,
    GridFunction,
    GridSpec,
    ccr_commutator_residual,
    delta_limit_integral,
    embedding_check,
    grid_derivative,
    hyperbolic_fourier,
    l2_inner,
    l2_norm,
    make_function,
    plancherel_defect,
    schwartz_seminorm,
)
from .linalg import (
    EigenResult,
    GMatrix,
    GVector,
    Spectrum,
    adjoint,
    eigen_sa2,
    evolve,
    exp_series,
    expected_value,
    inner_bound_check,
    inner_product,
    is_self_adjoint,
    scalar_bound_check,
    t_map,
)
from .suites import SuiteConfig, VerificationReport, list_suites, run_suite

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AlgebraSpec",
    "BUILTIN_SPECS",
    "ComplexRational",
    "ConfigError",
    "ConvergenceError",
    "CounterexamplePair",
    "DimensionMismatchError",
    "EigenResult",
    "FiniteSupportVector",
    "FourierResult",
    "GMatrix",
    "GVector",
    "GridAlignmentError",
    "GridFunction",
    "GridMismatchError",
    "GridSpec",
    "HyperbolicNumber",
    "HyperlinError",
    "LightConeError",
    "NotInDomainError",
    "NotSelfAdjointError",
    "SpecMismatchError",
    "Spectrum",
    "SuiteConfig",
    "UnknownSuiteError",
    "UnsupportedOrderError",
    "VerificationReport",
    "adjoint",
    "algebra_mul",
    "ccr_commutator_residual",
    "commutator_apply",
    "commutator_check",
    "complex_spec",
    "delta_limit_integral",
    "eigen_sa2",
    "embedding_check",
    "evolve",
    "exp_series",
    "expected_value",
    "grid_derivative",
    "hy_conj",
    "hy_inverse",
    "hy_mul",
    "hy_norm",
    "hyperbolic_fourier",
    "hyperbolic_spec",
    "inner_bound_check",
    "inner_product",
    "is_self_adjoint",
    "l2_inner",
    "l2_norm",
    "light_cone_contains",
    "list_suites",
    "make_function",
    "modulus",
    "multiplicativity_defect",
    "octonion_spec",
    "plancherel_defect",
    "quaternion_spec",
    "real_spec",
    "run_suite",
    "scalar_bound_check",
    "schwartz_seminorm",
    "t_map",
    "weyl_relation_check",
]
