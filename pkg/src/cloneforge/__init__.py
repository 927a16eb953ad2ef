"""cloneforge: finite operation tables, clone closures, and minimality sweeps."""

from .operations import (
    Operation,
    TableError,
    SubsetNotClosedError,
    FormatError,
    make_operation,
    projection,
    compose,
    is_projection,
    is_idempotent,
    is_majority,
    is_near_unanimity,
    is_semiprojection,
    is_cyclically_commutative,
    is_conservative,
    is_boolean_minority,
    restrict,
    range_of,
    majority_from_distinct,
    distinct_triples,
    conjugate,
    find_isomorphism,
    canonical_form,
    parse_operation,
    serialize_operation,
    serialize_majority,
)
from .relations import (
    Relation,
    make_relation,
    subset_relation,
    partition_relation,
    preserves,
    preserved_subsets,
    parse_relation,
)
from .terms import (
    Variable,
    Node,
    Term,
    eval_term,
    parse_term,
    term_to_string,
    named_superposition,
    star_compose,
    iterate_star,
    satisfies_star,
    hat,
    hat_exponent,
    check_star_value_pattern,
    verify_zy_case_chain,
    StarIdentityError,
)
from .clones import (
    CloneFragment,
    CloneCapExceeded,
    MinimalityKind,
    MinimalityVerdict,
    WitnessReason,
    ternary_closure,
    contains,
    generates,
    majority_members,
    membership_witness_term,
    quick_nonminimality_witness,
    is_minimal_majority,
    DEFAULT_CAP,
)
from .catalog import (
    GENERATOR_NAMES,
    generator,
    m_table,
    M_table,
    embedded_members,
    classify_three_element,
    ThreeElementClassification,
    glue_conservative,
    conservative_components,
)
from .reports import Report

__version__ = "0.1.0"
