"""Pattern avoidance in Dumont permutations: exhaustive generation, exact
reference sequences, explicit bijections and a verifier for the known
enumeration results."""

from .errors import *  # noqa: F401,F403
from .families import (
    DumontKind,
    count_avoiders,
    extend_to_odd,
    generate,
    genocchi,
    genocchi_table,
    is_member,
    iter_members,
)
from .perm import (
    Permutation,
    Symmetry,
    avoids_all,
    complement,
    contains,
    count_occurrences,
    find_occurrence,
    format_permutation,
    map_pattern_set,
    parse_pattern_set,
    parse_permutation,
    reversal,
    reverse_complement,
)
from .sequences import (
    ballot,
    catalan,
    closed_form_2341_1423,
    gen_catalan2,
    gf_coefficients,
    little_schroeder,
    rec_2341_1423,
    verify_lemma_4213_1342,
)
from .series import PowerSeries, series_add, series_invert, series_mul, series_sqrt
from .structure import (
    CycleDecomposition,
    DyckPath,
    TheoremId,
    WeakComposition,
    canonical_avoider,
    composition_to_d2_231,
    cycle_decomposition,
    d2_231_to_composition,
    d2_3142_decompose,
    d2_3142_to_dyck,
    dyck_to_d2_3142,
    matches_shape,
)
from .theorems import VerificationReport, verify_theorem

__version__ = "0.1.0"
