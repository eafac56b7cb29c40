"""Certify LOCC indistinguishability of orthogonal pure-state sets.

The library builds a four-party superposition out of the states to
distinguish and auxiliary detector states, then tests whether an LOCC
conversion of that superposition into the detector ensemble is allowed
by majorization. A forbidden conversion certifies that no LOCC protocol
can perfectly distinguish the original set.
"""

from .catalog import (
    OMEGA,
    bell_states,
    computational_basis,
    domino_basis,
    maximally_entangled,
    omega_basis,
    set_s,
    set_s_prime,
)
from .majorization import (
    ConversionCheck,
    SchmidtEnsemble,
    SchmidtVector,
    check_ensemble_conversion,
    ensemble_average,
    locc_convertible,
    majorizes,
)
from .search import (
    FIXED_BELL_ENUMERATION,
    FREE_DETECTORS,
    SearchConfig,
    SearchResult,
    search,
    simplex_sample,
)
from .states import (
    Bipartition,
    PureState,
    StateSetReport,
    SubsystemLayout,
    basis_state,
    conjugate,
    inner,
    is_product,
    parse_cut,
    permute_parts,
    random_orthonormal_basis,
    random_state,
    reduced_density_spectrum,
    relabel,
    schmidt,
    tensor,
    validate_state_set,
)
from .witness import (
    ALL_PRODUCT,
    CERTIFIED_INDISTINGUISHABLE,
    CONTAINS_ENTANGLED,
    INCONCLUSIVE,
    PROTOCOL_DISTINGUISHES,
    PROTOCOL_FAILS,
    FullBasisReport,
    WitnessProblem,
    WitnessReport,
    bipartite_cut_reduction,
    build_joint_state,
    check_witness,
    classify_full_basis,
    full_basis_problem,
    multipartite_product_check,
    verify_one_way_protocol,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_PRODUCT",
    "Bipartition",
    "CERTIFIED_INDISTINGUISHABLE",
    "CONTAINS_ENTANGLED",
    "ConversionCheck",
    "FIXED_BELL_ENUMERATION",
    "FREE_DETECTORS",
    "FullBasisReport",
    "INCONCLUSIVE",
    "OMEGA",
    "PROTOCOL_DISTINGUISHES",
    "PROTOCOL_FAILS",
    "PureState",
    "SchmidtEnsemble",
    "SchmidtVector",
    "SearchConfig",
    "SearchResult",
    "StateSetReport",
    "SubsystemLayout",
    "WitnessProblem",
    "WitnessReport",
    "basis_state",
    "bell_states",
    "bipartite_cut_reduction",
    "build_joint_state",
    "check_ensemble_conversion",
    "check_witness",
    "classify_full_basis",
    "computational_basis",
    "conjugate",
    "domino_basis",
    "ensemble_average",
    "full_basis_problem",
    "inner",
    "is_product",
    "locc_convertible",
    "majorizes",
    "maximally_entangled",
    "multipartite_product_check",
    "omega_basis",
    "parse_cut",
    "permute_parts",
    "random_orthonormal_basis",
    "random_state",
    "reduced_density_spectrum",
    "relabel",
    "schmidt",
    "search",
    "set_s",
    "set_s_prime",
    "simplex_sample",
    "tensor",
    "validate_state_set",
    "verify_one_way_protocol",
]
