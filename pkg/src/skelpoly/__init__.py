"""Exact combinatorics of Young tableaux and their generating polynomials."""

from .compositions import (
    IndexSet,
    ShapeStats,
    comp_to_set,
    compositions,
    conjugate,
    depth,
    dominance_covers,
    dominance_leq,
    flatten,
    is_hook,
    is_partition,
    is_regular,
    lambda_bar,
    maj_of_set,
    max_descent_length,
    partitions,
    raising_covers,
    refinements,
    set_to_comp,
    shape_stats,
    subsets,
    superboolean_covers,
)
from .crystal import (
    CrystalGraph,
    QuasiCrystal,
    build_crystal,
    evacuation,
    fundamental_system,
    graph_json,
    inner_crystal,
    lowering_operator,
    quasi_crystals,
    raising_operator,
    row_word,
    to_dot,
)
from .poly import (
    InternalZeros,
    MultiPoly,
    UniPoly,
    bifactorial,
    bifactorial_q_slice,
    deep_skeleton,
    fake_degree,
    internal_zeros,
    q_factorial,
    qsym_fundamental,
    qsym_monomial,
    quasi_kostka_coefficient,
    quasi_kostka_matrix,
    reverse_vars,
    schur_poly,
    skeleton_poly,
    skeleton_poly_i,
)
from .rsk import (
    PermStats,
    all_permutations,
    charge,
    descents,
    inverse,
    inversions,
    is_permutation,
    left_descents,
    perm_stats,
    rsk,
    rsk_inverse,
    symmetry_check,
    word_descent_composition,
)
from .tableaux import (
    Band,
    SpecialTableaux,
    Tableau,
    TableauStats,
    descent_composition,
    descent_set,
    destandardize,
    is_quasi_yamanouchi,
    kostka,
    minimal_parsing,
    quasi_kostka,
    quasi_yamanouchi_tableaux,
    semistandard_tableaux,
    semistandard_with_weight,
    special_tableaux,
    standard_tableaux,
    standard_with_descent,
    standardize,
    tableau_stats,
    weight,
)
from .verify import CHECK_NAMES, CheckResult, run_checks

__version__ = "0.1.0"
