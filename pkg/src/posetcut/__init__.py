"""Maximum directed cuts of finite posets."""

from .core import (
    Chain,
    CoverSet,
    Poset,
    down_degree,
    e_count,
    is_downward_closed,
    is_upward_closed,
    longest_chain,
    poset_from_covers,
    poset_from_relations,
    remove_relation,
    transitive_reduction,
    up_degree,
)
from .generators import FamilySpec, enumerate_small_posets, generate, parse_family
from .maxcut import (
    Category,
    Classification,
    Cut,
    brute_force_max_cut,
    classify,
    cut_size,
    local_search,
    make_cut,
    max_dicut,
    random_cut,
    verify_half_bound,
)
from .prooftrace import ProofTrace, TraceStep, chain_profile, inductive_step, run_induction

__version__ = "0.1.0"
