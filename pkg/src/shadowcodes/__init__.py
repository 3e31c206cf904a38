"""Linear codes over small prime fields built from multiplicative character
values of products of irreducible polynomials over an auxiliary field."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .algebra import (
    FieldElement,
    FiniteField,
    Polynomial,
    enumerate_monic_irreducibles,
    is_irreducible,
    is_prime,
    next_prime_power_gt,
    num_monic_irreducibles,
)
from .analysis import (
    CodeReport,
    curve_point_count,
    distance_lower_bound,
    genus_bound,
    hasse_weil_check,
    weight_distribution,
)
from .bounds import (
    BoundReport,
    DGParams,
    bound_report,
    compare_dg,
    dg_params,
    entropy,
    gv_bound,
    hamming_bound,
    mceliece_bound,
    plotkin_binary,
    spectral_bound,
)
from .character import Character, char_sum, char_value, character_make, get_character
from .charsum import CharSumResult, max_charsum, verify_claims
from .shadow_code import (
    ERASED,
    ConstructionReport,
    GeneratorMatrix,
    ShadowCodeSpec,
    build,
    construct_code,
    dimension_condition,
    encode_direct,
    erasure_decode,
    hamming_weight,
    load_matrix,
)

__version__ = "0.1.0"
