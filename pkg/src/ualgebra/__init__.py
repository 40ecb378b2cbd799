"""Workbench for finite universal algebras."""

from .algebra import (
    CarrierMap,
    FiniteAlgebra,
    Subalgebra,
    diagonal_hom,
    holds,
    in_equational_class,
    is_homomorphism,
    kernel,
    product,
    quotient,
    subalgebra_generated,
)
from .check import Check
from .congruences import (
    all_congruences,
    congruence_generated,
    is_congruence_direct,
    is_congruence_via_translations,
    join_congruences,
    largest_congruence_below,
)
from .factorization import (
    Factorization,
    enumerate_factorizations,
    greatest_factorization,
    is_factorization,
    least_factorization,
    precedes,
)
from .fixtures import (
    adjoined_infinity_monoid,
    cyclic_group,
    group_axioms,
    klein_four,
    malcev_algebra_from,
    semilattice2,
)
from .malcev import (
    clone_ternary_terms,
    find_malcev_operations,
    group_malcev,
    has_malcev_term,
    is_malcev_op,
    table_is_malcev,
)
from .partitions import Partition, all_partitions, bell_number, meet
from .signature import Signature, parse_signature
from .terms import (
    Apply,
    Constant,
    PreservationClass,
    Term,
    Variable,
    classify_identity,
    evaluate,
    format_term,
    occurrences,
    parse_term,
    vars_of,
)
from .translations import (
    PrincipalDescriptor,
    Translation,
    evaluate_word,
    principal_translations,
    translation_semigroup,
)

__all__ = [
    "Apply",
    "CarrierMap",
    "Check",
    "Constant",
    "Factorization",
    "FiniteAlgebra",
    "Partition",
    "PreservationClass",
    "PrincipalDescriptor",
    "Signature",
    "Subalgebra",
    "Term",
    "Translation",
    "Variable",
    "adjoined_infinity_monoid",
    "all_congruences",
    "all_partitions",
    "bell_number",
    "classify_identity",
    "clone_ternary_terms",
    "congruence_generated",
    "cyclic_group",
    "diagonal_hom",
    "enumerate_factorizations",
    "evaluate",
    "evaluate_word",
    "find_malcev_operations",
    "format_term",
    "greatest_factorization",
    "group_axioms",
    "group_malcev",
    "has_malcev_term",
    "holds",
    "in_equational_class",
    "is_congruence_direct",
    "is_congruence_via_translations",
    "is_factorization",
    "is_homomorphism",
    "is_malcev_op",
    "join_congruences",
    "kernel",
    "klein_four",
    "largest_congruence_below",
    "least_factorization",
    "malcev_algebra_from",
    "meet",
    "occurrences",
    "parse_signature",
    "parse_term",
    "precedes",
    "principal_translations",
    "product",
    "quotient",
    "semilattice2",
    "subalgebra_generated",
    "table_is_malcev",
    "translation_semigroup",
    "vars_of",
]
