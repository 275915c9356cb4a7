"""Exact Cayley-Dickson algebras and generalized Tribonacci sedenions."""

from .cdalg import (
    CdElement,
    CdError,
    OpCount,
    cd_add,
    cd_basis,
    cd_conjugate,
    cd_count_naive_ops,
    cd_mul_table,
    cd_multiply,
    cd_norm_sq,
)
from .identities import CATALOG, IdentityReport, check_identity
from .sedseq import (
    RootSedenions,
    SedenionTerm,
    gf_coefficients,
    root_sedenions,
    sed_binet,
    sed_conjugate,
    sed_norm_closed,
    sed_norm_direct,
    sed_sum,
    sed_term,
)
from .triseq import (
    Matrix3,
    NamedSequence,
    RootData,
    RootRegimeError,
    SequenceError,
    TriParams,
    binet_scalar,
    cubic_roots,
    det_D,
    howard_addition_check,
    matrix_power_entries,
    named_sequence,
    seq_term,
    seq_term_matrix,
    sum_scalar,
    u_term,
)

__version__ = "0.1.0"
