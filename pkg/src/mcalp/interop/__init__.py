from .cardinality import (
    CaAtom,
    CaClause,
    CaProgram,
    ca_sat,
    ca_sat_clause,
    ca_sat_program,
    ca_supported_models,
    ca_to_mca,
    mca_to_ca,
    nss_is_stable,
    nss_reduct,
    nss_stable_models,
)
from .disjunctive import (
    DisjunctiveClause,
    DisjunctiveProgram,
    dlp_possible_models,
    dlp_split_programs,
    dlp_to_mca,
    split_count,
)
from .normal import (
    NormalClause,
    NormalProgram,
    lp_gl_reduct,
    lp_least_model,
    lp_models,
    lp_sat,
    lp_to_mca,
    lp_tp,
)
