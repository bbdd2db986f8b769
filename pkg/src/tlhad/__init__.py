"""Rank-n Temperley-Lieb representations from generalized Hadamard data.

The package builds local TL generators from matrix spectra, classifies
the Hadamard-type matrices that govern when the construction closes,
and numerically verifies every relation involved: the TL relations
themselves, the Hecke condition of the derived braid generators, and
the constant and spectral Yang-Baxter equations. A JSON-speaking CLI
(`tlhad`) exposes generation, checking, building, and search for CI
use.
"""
from __future__ import annotations

from .baxter import (
    BraidData,
    baxterize,
    baxterize_agreement,
    braid_from_tl,
    check_braid,
    check_spectral_ybe,
    check_ybe,
    flip_operator,
    hecke_residual,
    q_from_nu,
    spectral_samples,
    to_plain_r,
)
from .hadamard import (
    EquivalenceMove,
    HadamardVerdict,
    apply_equivalence,
    dephase,
    dita,
    f4_family,
    f6_family,
    fourier,
    identity_move,
    invert_move,
    is_butson,
    is_chm,
    is_ghm,
    permutation_matrix,
)
from .linalg import (
    DEFAULT_TOL,
    FIXTURE_TOL,
    Comparison,
    Matrix,
    SingularMatrixError,
    Tolerance,
    approx_eq,
    as_matrix,
    diag,
    hadamard_inverse,
    identity,
    inverse,
    kron,
    mat_mul,
    mat_power,
    matrix_from_dict,
    matrix_to_dict,
    matrix_unit,
    unit_root,
    zeros,
)
from .master import (
    MasterSpec,
    NestingSpec,
    NestingStage,
    check_master_condition,
    f4_master,
    f6_master,
    fourier_master,
    h0,
    h1,
    master_matrix,
    master_polynomial_eval,
    nest,
    pigeonhole_obstruction,
    search_master_representation,
)
from .tlrep import (
    TLAnsatz,
    TLReport,
    build_local_generator,
    check_master4,
    eigenvector_condition,
    embed,
    fixture_u1,
    fixture_u1_ansatz,
    fixture_u2,
    fixture_u2_ansatz,
    gauge_transform,
    reconstruct_m,
    verify_tl,
    verify_tl_local,
    weighted_hadamard_check,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # linalg
    "DEFAULT_TOL",
    "FIXTURE_TOL",
    "Matrix",
    "Tolerance",
    "Comparison",
    "SingularMatrixError",
    "as_matrix",
    "identity",
    "zeros",
    "diag",
    "matrix_unit",
    "unit_root",
    "mat_mul",
    "kron",
    "mat_power",
    "inverse",
    "hadamard_inverse",
    "approx_eq",
    "matrix_to_dict",
    "matrix_from_dict",
    # hadamard
    "HadamardVerdict",
    "EquivalenceMove",
    "identity_move",
    "invert_move",
    "permutation_matrix",
    "apply_equivalence",
    "dephase",
    "is_chm",
    "is_ghm",
    "is_butson",
    "fourier",
    "f4_family",
    "f6_family",
    "dita",
    # master
    "MasterSpec",
    "NestingStage",
    "NestingSpec",
    "master_matrix",
    "master_polynomial_eval",
    "check_master_condition",
    "fourier_master",
    "f4_master",
    "f6_master",
    "nest",
    "pigeonhole_obstruction",
    "search_master_representation",
    "h0",
    "h1",
    # tlrep
    "TLAnsatz",
    "TLReport",
    "build_local_generator",
    "embed",
    "verify_tl",
    "verify_tl_local",
    "check_master4",
    "eigenvector_condition",
    "reconstruct_m",
    "weighted_hadamard_check",
    "gauge_transform",
    "fixture_u1",
    "fixture_u2",
    "fixture_u1_ansatz",
    "fixture_u2_ansatz",
    # baxter
    "BraidData",
    "q_from_nu",
    "braid_from_tl",
    "hecke_residual",
    "check_braid",
    "baxterize",
    "baxterize_agreement",
    "spectral_samples",
    "check_spectral_ybe",
    "flip_operator",
    "to_plain_r",
    "check_ybe",
]
