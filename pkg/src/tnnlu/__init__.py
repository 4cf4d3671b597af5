"""Exact LU decomposition of totally nonnegative matrices.

Every totally nonnegative matrix, singular ones included, has a unique
factorization A = L·U once the echelon shapes of the factors are pinned to
the matrix's leader class.  This package computes that factorization by
three independent routes (closed-form minor ratios, forward substitution,
and zero-row-deleting Neville elimination), detects the class of an
arbitrary rational matrix, tests total nonnegativity, and ships the
classical determinantal identities both as library calls and as test
oracles.  All arithmetic is exact.
"""

from .core import (
    IndexSet,
    Mat,
    Scalar,
    all_minors,
    as_scalar,
    delete_col,
    delete_row,
    det,
    format_matrix,
    format_scalar,
    indexset_leq,
    inversion_count,
    matmul,
    minor,
    parse_matrix,
    parse_scalar,
    rank,
    submatrix,
)
from .echelon import EchelonReport, in_class_L, in_class_U, is_lower_echelon, is_upper_echelon
from .errors import (
    MovePreconditionError,
    NotInClassError,
    NotTotallyNonnegativeError,
    ParseError,
    ReplayError,
    SizeGuardError,
)
from .explicit import LUPair, explicit_decompose, reconstruct_lu
from .identities import (
    MinorTerm,
    TermIdentity,
    cauchy_binet_check,
    evaluate_identity,
    laplace_sum_cols,
    laplace_sum_rows,
    laplace_three_term,
    muir_extend,
    sylvester_check,
    vanishing_check,
    vanishing_check_dual,
)
from .mclass import ClassDesc, detect_class, greedy_leaders, in_class_M
from .neville import (
    DeleteRow,
    Eliminate,
    NevilleTrace,
    format_trace,
    neville_decompose,
    neville_move,
    parse_trace,
    replay,
)
from .tnn import TnnReport, cauchon_check, is_tnn, is_tp, random_tnn

__version__ = "0.1.0"

__all__ = [
    "Scalar",
    "IndexSet",
    "Mat",
    "as_scalar",
    "parse_scalar",
    "format_scalar",
    "indexset_leq",
    "inversion_count",
    "submatrix",
    "minor",
    "det",
    "rank",
    "matmul",
    "delete_row",
    "delete_col",
    "all_minors",
    "parse_matrix",
    "format_matrix",
    "EchelonReport",
    "is_upper_echelon",
    "is_lower_echelon",
    "in_class_L",
    "in_class_U",
    "ClassDesc",
    "in_class_M",
    "detect_class",
    "greedy_leaders",
    "LUPair",
    "explicit_decompose",
    "reconstruct_lu",
    "DeleteRow",
    "Eliminate",
    "NevilleTrace",
    "neville_move",
    "neville_decompose",
    "replay",
    "format_trace",
    "parse_trace",
    "TnnReport",
    "is_tnn",
    "is_tp",
    "cauchon_check",
    "random_tnn",
    "MinorTerm",
    "TermIdentity",
    "evaluate_identity",
    "laplace_three_term",
    "muir_extend",
    "laplace_sum_rows",
    "laplace_sum_cols",
    "vanishing_check",
    "vanishing_check_dual",
    "cauchy_binet_check",
    "sylvester_check",
    "ParseError",
    "SizeGuardError",
    "NotInClassError",
    "NotTotallyNonnegativeError",
    "MovePreconditionError",
    "ReplayError",
]
