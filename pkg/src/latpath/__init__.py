"""Exact weighted lattice path counting for tilting-module tensor powers."""

from .closed_form import (
    aux_strip_multiplicity,
    ballot_f,
    binom,
    filter_count,
    poly_p,
    poly_q,
    strip_sum_f1,
    unrestricted_count,
    uq_multiplicity,
    wall_count,
)
from .errors import (
    DomainError,
    EnumerationGuardError,
    IncompleteSeedError,
    LatpathError,
    UnsupportedCaseError,
    WZPoleError,
)
from .identities import identity_onee, identity_q, identity_twoo, wz_certificate_check
from .lattice import (
    LatticePoint,
    ModelSpec,
    WeightedStep,
    allowed_steps,
    auxiliary,
    single_filter,
    strip_index,
    unrestricted,
    uq,
    wall_only,
)
from .paths import (
    CountTable,
    Region,
    Translation,
    boundary,
    check_congruent,
    count_paths,
    counts_from_boundary,
    enumerate_paths,
    weighted_count,
)
from .tilting import Decomposition, decompose, tensor_step, tilting_dim, verify_against_paths

__version__ = "0.1.0"
