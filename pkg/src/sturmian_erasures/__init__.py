"""Sturmian words, erasure-aware ternary morphisms, and exact billiard codings."""

from .billiard import (
    BilliardConfig,
    CrossingEvent,
    billiard_word,
    classify,
    event_stream,
)
from .exactnum import SqrtBasisNumber, parse_number, rational, sqrt
from .monoid import (
    StCertificate,
    StRejection,
    decode_over_code,
    recompose,
    st_degree,
    st_membership,
)
from .morphisms import (
    IncidenceMatrix,
    LetterClassification,
    Morphism,
    apply,
    classify_letters,
    compose,
    determinant,
    format_morphism,
    incidence,
    is_expansive,
    is_nilpotent_morphism,
    is_unit,
    parse_morphism,
)
from .mse import (
    MSEVerdict,
    PrimalityVerdict,
    PsiFamily,
    intercalate,
    length_filter,
    mse_membership,
    primality,
    projection_restriction,
    psi,
)
from .words import (
    BalanceProfile,
    BoundedOutputError,
    ComplexityProfile,
    SturmianVerdict,
    WordStream,
    WSEVerdict,
    apply_stream,
    balance_order,
    complexity,
    erase,
    fibonacci_numbers,
    fibonacci_stream,
    fixed_point_stream,
    literal_stream,
    mechanical_stream,
    period_scan,
    sturmian_verdict,
    wse_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "BalanceProfile",
    "BilliardConfig",
    "BoundedOutputError",
    "ComplexityProfile",
    "CrossingEvent",
    "IncidenceMatrix",
    "LetterClassification",
    "Morphism",
    "MSEVerdict",
    "PrimalityVerdict",
    "PsiFamily",
    "SqrtBasisNumber",
    "StCertificate",
    "StRejection",
    "SturmianVerdict",
    "WSEVerdict",
    "WordStream",
    "apply",
    "apply_stream",
    "balance_order",
    "billiard_word",
    "classify",
    "classify_letters",
    "complexity",
    "compose",
    "decode_over_code",
    "determinant",
    "erase",
    "event_stream",
    "fibonacci_numbers",
    "fibonacci_stream",
    "fixed_point_stream",
    "format_morphism",
    "incidence",
    "intercalate",
    "is_expansive",
    "is_nilpotent_morphism",
    "is_unit",
    "length_filter",
    "literal_stream",
    "mechanical_stream",
    "mse_membership",
    "parse_morphism",
    "parse_number",
    "period_scan",
    "primality",
    "projection_restriction",
    "rational",
    "psi",
    "recompose",
    "sqrt",
    "st_degree",
    "st_membership",
    "sturmian_verdict",
    "wse_verdict",
]
