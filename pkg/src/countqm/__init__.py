"""Counting functions on free monoids and free groups: minimization,
equivalence and cohomology decisions, with exact size-bounded arithmetic."""

from .coeff import (
    CoefficientDomain,
    CoefficientError,
    INT_DOMAIN,
    IntCode,
    RAT_DOMAIN,
    RatCode,
    format_coeff,
    get_domain,
    parse_coeff,
)
from .lists import (
    EncodedList,
    ListFormatError,
    WeightedBrotherhood,
    build_difference,
    detach_brotherhood,
    evaluate,
    from_entries,
    max_depth,
    normalize_list,
    parse_list,
    render_dot,
    serialize_list,
)
from .minimize import (
    PreconditionError,
    StepRecord,
    TransferMatrix,
    build_transfer_matrix,
    decide_cohomologous,
    decide_equivalent,
    find_minimal_list,
    is_antisymmetric,
    main_processing_step,
    prune_list,
    special_transfer_and_prune,
    transfer_and_prune,
)
from .oracle import (
    OracleTooLargeError,
    RelationBasis,
    empirical_sup,
    oracle_equivalent,
    oracle_minimal_depth,
    relation_vectors,
)
from .words import (
    Alphabet,
    WordError,
    count_occurrences,
    invert_word,
    is_reduced,
    parse_word,
    quasimorphism_value,
    render_word,
    shortlex_compare,
    stem_of,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
