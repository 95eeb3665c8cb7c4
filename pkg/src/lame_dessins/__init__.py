"""Dessins d'enfants realizing pull-backs of octahedral and icosahedral
hypergeometric operators to Lame operators."""

from .documents import DocumentError, from_document, to_document, to_dot, to_json_graph
from .enumerator import (
    DEFAULT_CAP,
    DegreeCapExceeded,
    count_classes,
    enumerate_marked,
    enumerate_passport,
    naive_classes,
)
from .fuchsian import (
    ICOSAHEDRAL,
    OCTAHEDRAL,
    DegenerateParent,
    LameSignature,
    NotASchwarzRow,
    SchwarzSignature,
    SingularityProfile,
    TableMismatch,
    check_condition_star,
    exponent_balance,
    fiber_count,
    parse_rational,
    pullback_degree,
    pullback_exponent,
    pulled_back_profile,
    riemann_hurwitz_balance,
    schwarz_signature,
)
from .generators import (
    generate,
    generate_icosahedral_fifth,
    generate_icosahedral_third,
    generate_octahedral_half,
    generate_octahedral_third,
)
from .hypermap import (
    Dessin,
    Feature,
    MarkedDessin,
    MarkMismatch,
    NotAPermutation,
    NotConnected,
    Passport,
    canonical_form,
    equivalent,
    face_permutation,
    genus,
    is_clean,
    is_preclean,
    marked_equivalent,
    new_dessin,
    passport,
)
from .monodromy import has_full_monodromy, pulled_back_monodromy_order
from .tables import (
    CASES,
    InvalidTable,
    RamificationTable,
    derive_tables,
    passport_of_table,
    render_table,
    table_for_case,
    validate_table,
)
from .validation import run_checks

__version__ = "0.1.0"
