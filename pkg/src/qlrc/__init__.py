"""Grid evaluation codes over finite fields, the CSS codes they induce,
locality certification, and exact bound checking."""

from .bounds import (
    BOUND_REGISTRY,
    BoundInput,
    BoundReport,
    classical_singleton_lrc,
    evaluate_all,
    gg_bound,
    griesmer_like,
    luo_css_bound,
    plotkin_like,
    plotkin_profile,
    q_singleton_pure,
    rational_to_json,
    sphere_packing_like,
    thm3_slack_lower_bound,
    weight_constrained_locality,
)
from .css import (
    CssRecord,
    LiftResult,
    css_from_code,
    css_from_grid,
    css_record_to_json,
    hermitian_lift,
)
from .errors import (
    AssertionFailed,
    BudgetError,
    BudgetExceeded,
    InternalCheckError,
    InvalidParameter,
    NotDualContaining,
    NotLocallyRecoverable,
    QlrcError,
    SearchBudgetExceeded,
)
from .gf import (
    FieldElement,
    FieldPair,
    FieldSpec,
    element_powers,
    field_from_json,
    field_to_json,
    make_field,
    quadratic_extension,
    split_prime_power,
)
from .grid_codes import (
    DeltaParams,
    GridCodeRecord,
    GridParams,
    Monomial,
    build_code,
    build_grid,
    build_grid_record,
    coset_distance_formula,
    delta_perp_set,
    delta_set,
    delta_size_formula,
    evaluate,
    impurity_predicate,
    locality_formula,
    make_delta_params,
    make_grid_params,
    min_distance_formula,
    monomial_distance,
    quantum_dimension_formula,
    record_to_json,
    twist_vector,
    valid_a_values,
    valid_b_values,
    witness_polynomial,
)
from .linear_codes import (
    CodeVector,
    LinearCode,
    code_from_json,
    code_to_json,
    contains,
    coset_min_weight_bruteforce,
    default_budget,
    euclidean_dual,
    frobenius_map,
    from_spanning_set,
    full_code,
    hermitian_dual,
    in_row_space,
    min_distance_bruteforce,
    weight,
    zero_code,
)
from .lrc import (
    HeavyRowResult,
    LemmaFamilyCode,
    LocalityCertificate,
    LocalityEntry,
    certify_locality,
    heavy_row_check,
    lemma_family,
)
from .verifier import (
    SweepResult,
    SweepSpec,
    VerdictRow,
    check_prop_impure,
    check_rem_valid,
    check_thm3,
    check_thm4,
    check_thm5,
    prime_powers,
    run_sweep,
)

__version__ = "0.1.0"
