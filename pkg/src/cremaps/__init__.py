"""Exact arithmetic for monomial Cremona maps.

Decide whether a monomial rational self-map is Cremona, construct its unique
normalized monomial inverse, compose and verify such maps, and (for the
plane case) decompose them into the two quadratic generators.
"""

from .exactmat import IntMatrix, RatMatrix, det_diag_perturbation, det_exact, inverse_rational
from .inverse import (
    AlgorithmTrace,
    DeltaLift,
    InverseSolution,
    SolutionReport,
    invert,
    invert_via_delta,
    invert_with_trace,
    minimal_delta_lift,
    normalize,
    verify_solution,
)
from .monomap import (
    InvalidMapError,
    MapError,
    MapSyntaxError,
    MonomialMap,
    NotCremonaError,
    Permutation,
    check_difference_integrality,
    compose,
    compose_all,
    format_map,
    identity_map,
    is_cremona,
    map_from_json,
    map_to_json,
    maps_equal,
    parse_map,
    perm_map,
    permute_map,
    reduce_canonical,
)
from .oracle import (
    BoundExceededError,
    ConeSystem,
    OracleResult,
    UniquenessViolationError,
    brute_force_solutions,
    cone_minimal_tau1,
    cone_system,
    h_prime_family,
)
from .plane import (
    DecompositionError,
    GeneratorWord,
    HyperbolismPower,
    PermToken,
    PlaneCase,
    Steiner,
    SupportPatternError,
    basic_generators,
    classify,
    decompose,
    evaluate_word,
    hyperbolism_inverse,
    hyperbolism_power,
    invert3_closed_form,
    normal_form,
    steiner_map,
    token_map,
)
from .cli import export_cone

__version__ = "0.1.0"

__all__ = [
    "AlgorithmTrace",
    "BoundExceededError",
    "ConeSystem",
    "DecompositionError",
    "DeltaLift",
    "GeneratorWord",
    "HyperbolismPower",
    "IntMatrix",
    "InvalidMapError",
    "InverseSolution",
    "MapError",
    "MapSyntaxError",
    "MonomialMap",
    "NotCremonaError",
    "OracleResult",
    "PermToken",
    "Permutation",
    "PlaneCase",
    "RatMatrix",
    "SolutionReport",
    "Steiner",
    "SupportPatternError",
    "UniquenessViolationError",
    "basic_generators",
    "brute_force_solutions",
    "check_difference_integrality",
    "classify",
    "compose",
    "compose_all",
    "cone_minimal_tau1",
    "cone_system",
    "decompose",
    "det_diag_perturbation",
    "det_exact",
    "evaluate_word",
    "export_cone",
    "format_map",
    "h_prime_family",
    "hyperbolism_inverse",
    "hyperbolism_power",
    "identity_map",
    "invert",
    "invert3_closed_form",
    "invert_via_delta",
    "invert_with_trace",
    "inverse_rational",
    "is_cremona",
    "map_from_json",
    "map_to_json",
    "maps_equal",
    "minimal_delta_lift",
    "normal_form",
    "normalize",
    "parse_map",
    "perm_map",
    "permute_map",
    "reduce_canonical",
    "steiner_map",
    "token_map",
    "verify_solution",
]
