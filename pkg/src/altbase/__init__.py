"""Exact arithmetic for alternate-base (periodic Cantor real base)
numeration systems: expansions, admissibility, rewriting-based addition and
subtraction, weight functions, and finiteness-condition reports."""

from .algebraic import (
    ComplexBox,
    FieldElement,
    FieldEmbedding,
    RationalPolynomial,
    RealAlgebraicField,
    RootClass,
    classify_root_pattern,
    conjugate_embeddings,
    elem_compare,
    elem_floor,
    field_create,
    minimal_polynomial,
)
from .bases import AlternateBase, approximate_betas, base_new_explicit, base_new_symbolic, shift
from .expansion import (
    DEFAULT_FUEL,
    GreedyState,
    NON_SIMPLE_PARRY,
    PARRY_UNKNOWN,
    SIMPLE_PARRY,
    Truncated,
    admissible,
    expansion_of_one,
    greedy_expand,
    parry_classify,
    quasi_greedy_of_one,
    value_of,
)
from .reports import (
    EmbeddingReport,
    NecessaryReport,
    Overall,
    SufficientReport,
    SufficientVerdict,
    necessary_conditions,
    sufficient_report,
)
from .rewrite import (
    AdditionTrace,
    RewriteRule,
    RuleSet,
    ViolationWitness,
    WeightConstruction,
    WeightFunction,
    add,
    add_with_trace,
    borrow_representation,
    build_rules,
    build_weight,
    check_gfs,
    find_violation,
    normalize,
    subtract,
    subtract_with_trace,
    weight_of,
)
from .words import (
    EPWord,
    FiniteDigitString,
    Word,
    digitwise_add,
    format_digit_string,
    lex_compare,
    make_word,
    parse_digit_string,
)
from . import errors

__version__ = "0.1.0"
