"""Exact integer toolkit for weighted composition triangles.

The package computes triangles c(n, k) of composition counts weighted by
iterated invert transforms of a seed sequence, by four independent
algorithms, and verifies them against closed binomial forms, partial Bell
polynomials, Pascal-matrix algebra, and brute-force restricted-word
enumeration.
"""

from .bell import bell_invert_identity_check, bell_table, partial_bell
from .errors import (
    ComptriError,
    DimensionError,
    EnumerationBudgetError,
    InsufficientSeedError,
    InternalConsistencyError,
    InvalidSeedError,
)
from .identities import (
    FormCheck,
    binom,
    chebyshev_u,
    check_binomial_inversion,
    check_chebyshev,
    check_closed_forms,
    check_power_expansion,
    check_word_binomial,
    closed_form,
)
from .pascal import (
    LowerTriangularMatrix,
    from_rows,
    identity,
    mat_mul,
    mat_pow,
    pascal_lower,
    shifted_pascal_inverse,
)
from .sequences import (
    ArithmeticFunction,
    Preset,
    invert_transform,
    iterate_invert,
    make_seed,
    transform_via_triangle,
)
from .triangle import (
    CompositionTriangle,
    extended_binomial,
    row_sum,
    step_up,
    triangle_bell,
    triangle_convolution,
    triangle_pascal,
    triangle_recurrence,
)
from .words import (
    DEFAULT_BUDGET,
    Restriction,
    WordModel,
    check,
    composition_to_word,
    count_words,
    mark_histogram,
    oracle_count,
    oracle_model,
    oracle_row,
    word_to_composition,
)

__version__ = "0.1.0"

__all__ = [
    "ArithmeticFunction",
    "CompositionTriangle",
    "ComptriError",
    "DimensionError",
    "EnumerationBudgetError",
    "FormCheck",
    "InsufficientSeedError",
    "InternalConsistencyError",
    "InvalidSeedError",
    "LowerTriangularMatrix",
    "Preset",
    "Restriction",
    "WordModel",
    "DEFAULT_BUDGET",
    "bell_invert_identity_check",
    "bell_table",
    "binom",
    "chebyshev_u",
    "check",
    "check_binomial_inversion",
    "check_chebyshev",
    "check_closed_forms",
    "check_power_expansion",
    "check_word_binomial",
    "closed_form",
    "composition_to_word",
    "count_words",
    "extended_binomial",
    "from_rows",
    "identity",
    "invert_transform",
    "iterate_invert",
    "make_seed",
    "mark_histogram",
    "mat_mul",
    "mat_pow",
    "oracle_count",
    "oracle_model",
    "oracle_row",
    "partial_bell",
    "pascal_lower",
    "row_sum",
    "shifted_pascal_inverse",
    "step_up",
    "transform_via_triangle",
    "triangle_bell",
    "triangle_convolution",
    "triangle_pascal",
    "triangle_recurrence",
    "word_to_composition",
]
