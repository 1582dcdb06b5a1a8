"""Inversion of nonsingular tridiagonal matrices by ratio recursions.

The extended ratio scheme (:func:`invert_ratio_extended`) inverts any
nonsingular tridiagonal matrix in n^2 + O(n) multiplications, handling exact
zeros in the inverse through extended-real ratio arithmetic.  Classic
recursive methods (naive backward recursion, two-way, rank-one factor
formulas and their block variant) are provided for comparison, together with
a dense pivoted-elimination oracle, residual/condition reporting, matrix
generators and file I/O, and the ``trinv`` benchmark CLI.

Kernels run numba-compiled by default; set ``TRINV_BACKEND=numpy`` (or call
``trinv.backends.select``) for the pure numpy fallback.
"""

from . import backends
from .core import (
    EPS,
    NORM_KINDS,
    RESIDUAL_NORM_KINDS,
    DenseMatrix,
    ResidualReport,
    TridiagonalMatrix,
    condition_number,
    make_tridiagonal,
    multiply,
    norm,
    residual_report,
)
from .errors import (
    NotApplicableError,
    RecurrenceOverflowError,
    SingularMatrixError,
    TridiagonalError,
    ZeroOffDiagonalError,
)
from .oracle import PivotedFactorization, dense_invert_gepp, gepp_factorize, two_norm_estimate
from .classic import (
    BlockSplit,
    LewisWorkspace,
    MillerWorkspace,
    find_block_split,
    invert_lewis,
    invert_lewis_block,
    invert_lewis_block_counted,
    invert_lewis_counted,
    invert_naive,
    invert_naive_counted,
    invert_two_way,
    invert_two_way_counted,
    lewis_workspace,
    miller_column,
    miller_workspace,
    two_way_diagonal_gap,
)
from .ratio import (
    RatioSet,
    ZeroStructure,
    compute_ratios,
    compute_ratios_counted,
    invert_ratio_basic,
    invert_ratio_basic_counted,
    invert_ratio_extended,
    invert_ratio_extended_counted,
    predict_zero_structure,
)
from .generators import GeneratorSpec, generate, parse_generator, random_tridiagonal, t10, toeplitz
from .matio import read_dense, read_matrix, write_dense, write_matrix
from .bench import (
    METHOD_NAMES,
    CompareReport,
    MethodResult,
    compare_to_json,
    compare_to_text,
    invert_with,
    run_bench,
    run_compare,
    write_bench_csv,
)

__version__ = "0.1.0"

__all__ = [
    "EPS",
    "NORM_KINDS",
    "RESIDUAL_NORM_KINDS",
    "TridiagonalMatrix",
    "DenseMatrix",
    "ResidualReport",
    "make_tridiagonal",
    "multiply",
    "norm",
    "residual_report",
    "condition_number",
    "TridiagonalError",
    "NotApplicableError",
    "ZeroOffDiagonalError",
    "RecurrenceOverflowError",
    "SingularMatrixError",
    "PivotedFactorization",
    "gepp_factorize",
    "dense_invert_gepp",
    "two_norm_estimate",
    "MillerWorkspace",
    "LewisWorkspace",
    "BlockSplit",
    "miller_column",
    "miller_workspace",
    "invert_naive",
    "invert_naive_counted",
    "invert_two_way",
    "invert_two_way_counted",
    "two_way_diagonal_gap",
    "lewis_workspace",
    "invert_lewis",
    "invert_lewis_counted",
    "find_block_split",
    "invert_lewis_block",
    "invert_lewis_block_counted",
    "RatioSet",
    "ZeroStructure",
    "compute_ratios",
    "compute_ratios_counted",
    "invert_ratio_basic",
    "invert_ratio_basic_counted",
    "invert_ratio_extended",
    "invert_ratio_extended_counted",
    "predict_zero_structure",
    "GeneratorSpec",
    "parse_generator",
    "generate",
    "t10",
    "toeplitz",
    "random_tridiagonal",
    "read_matrix",
    "write_matrix",
    "read_dense",
    "write_dense",
    "METHOD_NAMES",
    "MethodResult",
    "CompareReport",
    "invert_with",
    "run_compare",
    "compare_to_json",
    "compare_to_text",
    "run_bench",
    "write_bench_csv",
    "backends",
    "__version__",
]
