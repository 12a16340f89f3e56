"""Sparse factorizations J = J0 A J0 of the scaled all-ones matrix.

Exact-rational constructions (RHB, DSHB, sequential doubly stochastic) plus
three-phase mixing schedules with finite-time average consensus. Entries of
every factor are exposed as :class:`fractions.Fraction`; dense views are
numpy arrays.
"""

from ._core import (
    ConsensusTrace,
    CostReport,
    CostRow,
    DshbFactorization,
    HBSequence,
    IoError,
    MixingSchedule,
    Partition,
    PartitionError,
    RhbFactorization,
    Round,
    SdsFactorization,
    ShapeError,
    SparseMatrix,
    block_diag_j,
    build_schedule,
    cost_report,
    direct_sum,
    dshb_factorize,
    dshb_two_block,
    identity,
    intra_cluster_schedule,
    is_exact_factor,
    is_hierarchically_banded,
    matmul,
    max_abs_diff,
    ones_j,
    partition_from_base,
    partition_from_parts,
    partition_from_text,
    random_state,
    read_matrix_json,
    read_matrix_market,
    rhb_factorize,
    rhb_two_block,
    schedule_product,
    sds_factorize,
    simulate,
    t_factor,
    v_recursion,
    verify_factor_file,
    write_factor_file,
    write_matrix_json,
    write_matrix_market,
)

__all__ = [
    "ConsensusTrace",
    "CostReport",
    "CostRow",
    "DshbFactorization",
    "HBSequence",
    "IoError",
    "MixingSchedule",
    "Partition",
    "PartitionError",
    "RhbFactorization",
    "Round",
    "SdsFactorization",
    "ShapeError",
    "SparseMatrix",
    "block_diag_j",
    "build_schedule",
    "cost_report",
    "direct_sum",
    "dshb_factorize",
    "dshb_two_block",
    "identity",
    "intra_cluster_schedule",
    "is_exact_factor",
    "is_hierarchically_banded",
    "matmul",
    "max_abs_diff",
    "ones_j",
    "partition_from_base",
    "partition_from_parts",
    "partition_from_text",
    "random_state",
    "read_matrix_json",
    "read_matrix_market",
    "rhb_factorize",
    "rhb_two_block",
    "schedule_product",
    "sds_factorize",
    "simulate",
    "t_factor",
    "v_recursion",
    "verify_factor_file",
    "write_factor_file",
    "write_matrix_json",
    "write_matrix_market",
]

__version__ = "0.1.0"
