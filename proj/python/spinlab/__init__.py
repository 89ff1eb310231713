"""Spin-factor Jordan algebra, uncurling metrics, and spacetime products."""

from ._core import (  # noqa: F401
    CliffordSignature,
    EmptySolutionError,
    Multivector,
    NullElementError,
    OutsideNormDomainError,
    PathCrossesNullConeError,
    SamplingFailureError,
    Signature,
    SignatureMismatchError,
    SpinFactorElement,
    UsageError,
    boost,
    bullet,
    check_invariances,
    circ,
    closed_form_norm,
    conjugate,
    diamond,
    geometric_product,
    grade_project,
    gradient_relation_residual,
    identity,
    inverse,
    minkowski_inner,
    partial_wedge,
    partial_wedge_dagger,
    quad_product,
    quad_product_paths,
    quadratic_form,
    run_suite,
    solve_uncurling,
    spacetime_split,
    unital_norm,
    vector_inner,
    wedge,
    __version__,
)

__all__ = [name for name in dir() if not name.startswith("_")]
