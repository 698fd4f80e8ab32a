"""zgkit: a workbench for finite semigroups around central-group varieties."""

from .automata import (
    Dfa,
    ShuffleTerm,
    classify_language,
    decomposition_roundtrip,
    dfa_equivalent,
    distinguishing_word,
    make_dfa,
    minimize,
    syntactic_monoid,
    syntactic_semigroup,
    term_to_dfa,
    zg_decompose,
)
from .category import (
    CatArrow,
    CatPath,
    IdemCategory,
    build_category,
    compose,
    evaluate_path,
    frequent_graph_is_union_of_sccs,
    search_prefix_substitution,
    verify_local_identities,
    verify_loop_commutation,
    verify_loop_insertion,
)
from .congruence import (
    NpParams,
    NpSignature,
    concat,
    enumerate_reachable_signatures,
    equivalent,
    refines,
    representative,
    signature,
    signature_monoid,
    verify_moveend,
)
from .delay import (
    CompatibilityReport,
    check_compatibility,
    cross_validate,
    membership_zgp_d,
)
from .enumeration import EnumSpec, enumerate_semigroups, verify_corpus
from .graphs import EarStep, Multigraph, ear_decomposition, make_multigraph
from .semigroups import (
    FiniteSemigroup,
    Mismatch,
    Morphism,
    Witness,
    adjoin_identity,
    direct_product,
    evaluate_word,
    local_monoid,
    make_semigroup,
)
from .thresholds import (
    find_distant_threshold,
    is_distant,
    minimal_distant_threshold,
    pump_factor,
)
from .varieties import (
    IdentityName,
    VarietyVerdict,
    check_identity,
    is_in,
    lzg_via_local_monoids,
    verify_omega_distrib,
    verify_zg_interleave,
    zgp,
)

__version__ = "0.1.0"
