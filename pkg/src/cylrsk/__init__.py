"""Growth-diagram engine for cylindric RSK correspondences.

Implements partitions and staircases with their interlacing relations,
fillings of Young diagrams with chain statistics and pattern detection,
oscillating and skew tableaux, the plain / cyclic / skew-cyclic local growth
rules, the bijections they induce, and three cross-checking enumeration
routes for doubly pattern-avoiding permutations.
"""

from .errors import (
    ChainBoundExceeded,
    DomainError,
    FormatError,
    InvariantViolation,
    PatternContainment,
)
from .partitions import (
    as_partition,
    as_staircase,
    cointerlaces,
    conjugate,
    contained_in,
    cyl_conjugate,
    dl_cointerlaces,
    dl_interlaces,
    interlaces,
    mcw_pair,
    partition_to_staircase,
    staircase_to_partition,
)
from .fillings import (
    Filling,
    boundary_type_sequence,
    col_sums,
    contains_pattern,
    filling_to_permutation,
    longest_ne_chain,
    longest_se_chain,
    permutation_to_filling,
    reflect,
    row_sums,
)
from .tableaux import (
    OscillatingTableau,
    RowStrictTableau,
    SemistandardTableau,
    SkewOscillatingTableau,
    SkewRowStrictTableau,
    join_pair,
    split_pair,
)
from .growth import (
    GrowthDiagram,
    Rule,
    check_cell,
    classify_rs_cell,
    extract_boundary,
    grow_backward_cell,
    grow_forward_cell,
    grow_from_boundary,
    grow_from_filling,
    grow_skew,
)
from .correspond import (
    bwx_inverse,
    bwx_map,
    conjugate_standard_pair,
    cylindric_rs,
    cylindric_rs_inverse,
    cylindric_rsk,
    cylindric_rsk_inverse,
    drsk,
    drsk_inverse,
    rowstrict_retype,
    rsk,
    rsk_inverse,
    skew_retype,
    wilf_bijection,
)
from .counting import (
    CountTable,
    asymptotic,
    brute_count,
    brute_count_involutions,
    count_table,
    cylindric_syt_count,
    tableau_pair_count,
    trig_count,
)

__version__ = "0.1.0"
