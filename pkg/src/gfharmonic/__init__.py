"""Exact harmonic analysis over square-order finite fields.

GF(p^(2n)) carries a conjugation, a norm into GF(p^n), and a cyclic unit
circle of order p^n + 1.  Groups whose cyclic factors divide that circle
order admit circle-valued characters, an exact Fourier transform, and a
bentness notion for circle-valued (and vector-valued) tables, plus a
floating-point bridge to the classical complex-valued bentness.
"""

from .bent import (
    BentReport,
    SearchResult,
    autocorrelation,
    derivative,
    dual_bent,
    is_bent_autocorr,
    is_bent_spectral,
    iter_bent_tables,
    mm_construct,
    search_bent,
)
from .characters import (
    ScalarFunction,
    char_exponent,
    character_row,
    character_sum,
    character_value,
    character_value_naive,
    evaluation_map_is_bijective,
    inner_product,
)
from .classical import (
    ExponentFunction,
    classical_ft,
    comparison_check,
    embed,
    is_classical_bent,
)
from .errors import (
    BudgetExceeded,
    DegreeMismatch,
    DimensionMismatch,
    DivisionByZero,
    HarmonicError,
    InadmissibleFactor,
    IndexOutOfRange,
    InvalidDivisor,
    InvalidOrder,
    MalformedInput,
    NonPrime,
    NotBent,
    NotCircleValued,
    NotOnHypersphere,
    NotQuadraticResidue,
    ReducibleModulus,
    ShapeMismatch,
    SpecMismatch,
    TooLarge,
)
from .field import FieldContext, FieldElement, make_context
from .fourier import convolve, ft, inverse_ft, parseval_check, plancherel_check
from .group import GroupSpec, make_group
from .vectorial import (
    VectorFunction,
    coordinate_function,
    hermitian_dot,
    is_md_bent,
    is_md_bent_derivative,
    md_derivative,
    md_ft,
    md_inverse_ft,
    norm_l,
    on_hypersphere,
    vector_convolve,
)

__version__ = "0.1.0"

__all__ = [
    "BentReport",
    "BudgetExceeded",
    "DegreeMismatch",
    "DimensionMismatch",
    "DivisionByZero",
    "ExponentFunction",
    "FieldContext",
    "FieldElement",
    "GroupSpec",
    "HarmonicError",
    "InadmissibleFactor",
    "IndexOutOfRange",
    "InvalidDivisor",
    "InvalidOrder",
    "MalformedInput",
    "NonPrime",
    "NotBent",
    "NotCircleValued",
    "NotOnHypersphere",
    "NotQuadraticResidue",
    "ReducibleModulus",
    "ScalarFunction",
    "SearchResult",
    "ShapeMismatch",
    "SpecMismatch",
    "TooLarge",
    "VectorFunction",
    "autocorrelation",
    "char_exponent",
    "character_row",
    "character_sum",
    "character_value",
    "character_value_naive",
    "classical_ft",
    "comparison_check",
    "convolve",
    "coordinate_function",
    "derivative",
    "dual_bent",
    "embed",
    "evaluation_map_is_bijective",
    "ft",
    "hermitian_dot",
    "inner_product",
    "inverse_ft",
    "is_bent_autocorr",
    "is_bent_spectral",
    "is_classical_bent",
    "is_md_bent",
    "is_md_bent_derivative",
    "iter_bent_tables",
    "make_context",
    "make_group",
    "md_derivative",
    "md_ft",
    "md_inverse_ft",
    "mm_construct",
    "norm_l",
    "on_hypersphere",
    "parseval_check",
    "plancherel_check",
    "search_bent",
    "vector_convolve",
]
