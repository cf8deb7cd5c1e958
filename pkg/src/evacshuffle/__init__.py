"""Local evacuation-shuffling of Littlewood-Richardson tableaux and the monodromy it computes."""

from .enumeration import (
    enumerate_box_first,
    enumerate_box_last,
    enumerate_genomic,
    enumerate_pieri_strips,
    enumerate_stage,
    many_components_family,
    staircase_family,
    validate_triple,
)
from .jdt import (
    Chain,
    SlideRecord,
    esh_by_shuffles,
    esh_oracle,
    inward_slide,
    outward_slide,
    rectify,
    rotate_transpose_highest_weight,
    sh,
    sh_inverse,
    shuffle,
)
from .local import (
    EvacuShufflePath,
    Move,
    SDecomposition,
    local_esh,
    local_esh_reverse,
    s_decomposition,
    step_ell,
    step_sh,
    transition_step,
)
from .monodromy import (
    CurveInvariants,
    OrbitReport,
    check_conjecture,
    curve_invariants,
    is_fixed_point,
    omega,
    omega_i,
    orbit_decomposition,
    phi1,
    phi2,
)
from .punctured import GenomicTableau, PuncturedTableau
from .tableau import (
    BOX,
    Partition,
    Rectangle,
    SkewShape,
    SkewTableau,
    complement,
    content,
    format_rows,
    is_ballot,
    is_semistandard,
    parse_rows,
    reading_word,
    rotate180,
    standardize,
    transpose,
)

__version__ = "0.1.0"
