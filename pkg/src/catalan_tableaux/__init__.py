"""Iterates of algebras with several operations: exact counts, substitution
tableaux, incidence matrices of formally reducible identities, binary
projections and the grammar view of iterates."""

from .counting import (
    binomial,
    catalan_asymptotic_ratio,
    classical_catalan,
    composition_count,
    functional_equation_residual,
    fuss_catalan,
    lambda_binary_closed,
    structure_catalan,
)
from .grammar import generate_language, grammar_from_signature, language_equals_enumeration
from .incidence import (
    incidence_matrix,
    reducible_count,
    reducible_count_via_histogram,
    render_exhibit,
    theorem_row_sum,
    verify_theorem,
)
from .projection import binary_projections, project_signature, render_projection
from .tableau import build_tableau, canonical_labels, multiplicity_table, tableau_stats
from .terms import (
    Application,
    ConstantLeaf,
    Signature,
    VariableLeaf,
    enumerate_iterates,
    make_signature,
    order_of,
    parse_polish,
    parse_signature,
    render_polish,
    substitute_at_place,
    variable_places,
)

__version__ = "0.1.0"
