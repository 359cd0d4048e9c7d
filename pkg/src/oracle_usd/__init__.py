"""Exact unambiguous-discrimination analysis for quantum oracle operators."""

from .functions import (
    BudgetExceeded,
    FunctionSet,
    FunctionTable,
    add_mod,
    all_functions_set,
    enumerate_all_functions,
    enumerate_tif_sets,
    is_classically_distinguishable,
    is_permutation,
    is_totally_indistinguishable,
    load_function_set,
    make_function,
    negate_mod,
)
from .gram import (
    CoincidenceMatrix,
    SpectrumReport,
    all_functions_verdict,
    coincidence_matrix,
    exact_determinant,
    grover_gamma_closed_form,
    grover_phase_gram_det,
    grover_set,
    is_unambiguously_distinguishable,
    per_point_matrix,
    spectrum,
)
from .multicall import (
    distinguishable_with_calls,
    hadamard_power,
    minimal_calls_search,
    sufficient_calls_bound,
)
from .operators import (
    brute_force_linear_independence,
    entanglement_assisted_minimal,
    minimal_oracle_matrix,
    standard_oracle_matrix,
)
from .tif import (
    build_graph,
    column_profile,
    find_even_induced_cycle,
    generate_tif4,
    m2_tif_verdict,
    tif4_det,
)

__version__ = "0.1.0"
