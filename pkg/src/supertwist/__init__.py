"""Jordanian r-matrices and twists for Lie superalgebras.

The package builds gl/sl(m|n) and osp(M|2n) in their fundamental
representations, constructs the chain of Jordanian-type classical
r-matrices attached to a normal ordering of the positive roots, builds the
corresponding twist chain, and mechanically verifies every identity along
the way: the classical Yang-Baxter equation, cobracket kernels, twist
cocycle and counit axioms, closed-form twisted coproducts and antipodes,
triangularity of the universal R-matrix, and the folding identities behind
the twisted antipode.

Quick start::

    from supertwist import run_all, failures
    reports = run_all()
    assert not failures(reports)

or, from the shell, ``supertwist selftest``.
"""

from .algebra import (
    Root,
    StructureError,
    SuperAlgebra,
    UnsupportedAlgebra,
    build_algebra,
    osp12_standard_basis,
    parse_algebra_spec,
    remove_short_roots,
)
from .rmatrix import (
    Carrier,
    CarrierError,
    CarrierPair,
    Chain,
    chain_cybe_residual,
    cobracket,
    cobracket_kernel,
    cybe_residual,
    detect_carrier,
    jordanian_rmatrix,
    kernel_closed_under_bracket,
    kernel_contains,
    make_chain,
    residual_vanishes_by_squares,
    stage_rmatrix,
    wedge,
)
from .scalars import Parameter, Scalar, ScalarRing
from .tensor import (
    Context,
    Element,
    antipode_map,
    counit_map,
    custom_map,
    exp_series,
    fold,
    leg_map,
    log1p_series,
    primitive_map,
    super_flip,
    to_matrix,
    transform,
)
from .twist import (
    VerificationReport,
    antipode,
    chain_twist,
    cocycle_residual,
    coproduct,
    coproduct_emb,
    counit_emb,
    counit_residuals,
    element_inverse,
    extension_twist,
    hopf_u,
    jordanian_twist,
    leg_emb,
    sigma,
    stage_twist,
    super_factor,
    twisted_antipode,
    twisted_coproduct,
    universal_r,
    w_builder,
)
from .verify import (
    ACCEPTANCE_ALGEBRAS,
    failures,
    run_all,
    special_rmatrices,
    verify_closed_forms,
    verify_cybe,
    verify_engine,
    verify_foldings,
    verify_kernels,
    verify_odd_branch,
    verify_reduction,
    verify_special_rmatrices,
    verify_triangularity,
    verify_trivialization,
    verify_twist_axioms,
)

__version__ = "0.1.0"

__all__ = [
    "ACCEPTANCE_ALGEBRAS",
    "Carrier",
    "CarrierError",
    "CarrierPair",
    "Chain",
    "Context",
    "Element",
    "Parameter",
    "Root",
    "Scalar",
    "ScalarRing",
    "StructureError",
    "SuperAlgebra",
    "UnsupportedAlgebra",
    "VerificationReport",
    "antipode",
    "antipode_map",
    "build_algebra",
    "chain_cybe_residual",
    "chain_twist",
    "cobracket",
    "cobracket_kernel",
    "cocycle_residual",
    "coproduct",
    "coproduct_emb",
    "counit_emb",
    "counit_map",
    "counit_residuals",
    "custom_map",
    "cybe_residual",
    "detect_carrier",
    "element_inverse",
    "exp_series",
    "extension_twist",
    "failures",
    "fold",
    "hopf_u",
    "jordanian_rmatrix",
    "jordanian_twist",
    "kernel_closed_under_bracket",
    "kernel_contains",
    "leg_emb",
    "leg_map",
    "log1p_series",
    "make_chain",
    "osp12_standard_basis",
    "parse_algebra_spec",
    "primitive_map",
    "remove_short_roots",
    "residual_vanishes_by_squares",
    "run_all",
    "sigma",
    "special_rmatrices",
    "stage_rmatrix",
    "stage_twist",
    "super_factor",
    "super_flip",
    "to_matrix",
    "transform",
    "twisted_antipode",
    "twisted_coproduct",
    "universal_r",
    "verify_closed_forms",
    "verify_cybe",
    "verify_engine",
    "verify_foldings",
    "verify_kernels",
    "verify_odd_branch",
    "verify_reduction",
    "verify_special_rmatrices",
    "verify_triangularity",
    "verify_trivialization",
    "verify_twist_axioms",
    "w_builder",
    "wedge",
]
