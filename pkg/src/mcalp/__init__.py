"""Logic programs with monotone cardinality atoms: semantics and translations."""

from .core import (
    DEFAULT_LIMIT,
    Classification,
    McaClause,
    McaProgram,
    McAtom,
    McLiteral,
    classify,
    enumerate_models,
    format_set,
    hset,
    interp,
    mk_mc_atom,
    sat_clause,
    sat_mc_atom,
    sat_mc_literal,
    sat_program,
)
from .errors import (
    BoundExceedsSet,
    HasConstraints,
    InvalidAtom,
    LimitExceeded,
    McaError,
    NotAModel,
    NotDeterministic,
    NotHorn,
    ParseError,
)
from .horn import (
    Trace,
    canonical_computation,
    derivable_models,
    derivable_models_search,
    greedy_computation,
    is_derivable,
    largest_derivable,
    least_model_deterministic,
    random_computation,
)
from .operator import applicable, is_one_step_provable, td_step, tnd_canonical, tnd_enumerate
from .stable import (
    QuasiTrace,
    find_quasi_computation,
    is_stable,
    is_supported,
    quasi_stable_check,
    reduct,
    stable_models,
    supported_models,
)
from .textio import parse, parse_ca, parse_dlp, parse_lp, parse_mca, serialize
