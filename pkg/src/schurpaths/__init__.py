"""Exact machinery for products of skew Schur functions.

Partitions and their boundary point model, semistandard skew tableaux, the
bijection with nonintersecting lattice paths, overlays with bicoloured-path
recolouring, and verified expansion identities for products of skew Schur
functions, all in exact integer arithmetic.
"""

from .partitions import (
    BoxNumberOutOfRange,
    ConstraintViolated,
    EmptyPartition,
    NegativePart,
    NegativeResultingPart,
    NotWeaklyDecreasing,
    Partition,
    PartitionError,
    PointSet,
    RowOutOfRange,
    RowsTooSmall,
    SkewShape,
    StripSpec,
    StripDoesNotFit,
    add_strip,
    build_nu,
    from_points,
    peel_complete,
    peel_down,
    peel_up,
    to_points,
    validate_partition,
)
from .tableaux import (
    ColumnViolation,
    EntryOutOfRange,
    RowViolation,
    ShapeMismatch,
    Tableau,
    TableauError,
    enumerate_ssyt,
    first_tableau,
    last_tableau,
    random_tableau,
    validate_tableau,
    weight,
)
from .paths import (
    LatticePath,
    MalformedFamily,
    PathFamily,
    endpoints,
    family_from_paths,
    is_nonintersecting,
    paths_to_tableau,
    tableau_to_paths,
)
from .overlay import (
    ZERO,
    BicolouredPath,
    CircularConfiguration,
    Colour,
    ColouredPoint,
    LevelMismatch,
    Matching,
    NotAdmissibleConfiguration,
    NotColouredPoint,
    OddColouredCount,
    Orientation,
    Overlay,
    PathNotInOverlay,
    all_bicoloured,
    configuration_from_families,
    configuration_to_shapes,
    enumerate_admissible_matchings,
    make_overlay,
    recolour,
    trace_bicoloured,
)
from .schur import (
    Polynomial,
    VariableCountMismatch,
    bareiss_determinant,
    complete_homogeneous_values,
    skew_schur,
    skew_schur_eval,
)
from .identities import (
    EmptyS,
    Identity,
    NotAlternating,
    ProductTerm,
    SNotInward,
    VerificationReport,
    border_strip_identity,
    configuration_from_shapes,
    estimate_expansion_size,
    minimal_alphabet,
    recolouring_expansion,
    strips_match_recolouring,
    verify_identity,
)
from .render import RenderSpec, render_configuration, render_ferrers, render_overlay

__version__ = "0.1.0"
