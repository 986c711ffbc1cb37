"""BCK/BCI-algebras, finite posets and binary block codes.

Codes are generated from algebras and posets through cut functions, and
any binary block code can be embedded in a BCK-algebra from which it is
recovered. Every algebraic property is verified by exhaustive checking.
"""
from ._verdict import Verdict
from .algebra import (
    AxiomReport,
    CayleyTable,
    MalformedTableError,
    MorphismCheck,
    check_morphism,
    derived_order,
    is_closed_ideal,
    is_commutative,
    is_implicative,
    is_right_ideal,
    is_subalgebra,
    verify_bci,
    verify_bck,
)
from .boolean_ring import (
    SubsetFamily,
    code_family,
    codeword_to_subset,
    format_subset,
    is_boolean_subring,
    subset_to_codeword,
)
from .codegen import BCKFunction, cut_function, generate_code, leq_c
from .codes import (
    BlockCode,
    Codeword,
    code_matrix,
    hamming_distance,
    is_linear,
    lex_sort,
    min_distance,
    min_distance_pair,
)
from .linear_group import GroupReport, certify_group, xor_group
from .poset import (
    NotAPartialOrder,
    Poset,
    all_posets,
    cut_vector,
    hasse_edges,
    maximum,
    minimal_elements,
    minimum,
    poset_to_bck,
    poset_to_code,
    to_dot,
    transitive_closure,
)
from .reconstruction import (
    ExtendedMatrix,
    Reconstruction,
    code_to_bck,
    code_to_matrix,
    display_label,
    matrix_to_poset,
    parse_label,
    recover_code,
    verify_closed_right_ideal,
)

__version__ = "0.1.0"
