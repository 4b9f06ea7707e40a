"""Distance sets, quotient sets, and character-sum identities over F_q^d.

The package builds extension fields F_{p^ell} for odd primes p, the canonical
additive and quadratic characters with their Gauss sum, spheres under the
quadratic norm, the normalized Fourier transform on the grid, and the exact
pair-distance machinery behind distance-set and quotient-set coverage checks.
Everything that can be counted is counted in exact integers; every spectral
route is validated against the exact one.
"""

__version__ = "0.1.0"

from .characters import TOLERANCE, CharacterCtx, characters_for, within_tolerance
from .distance import (
    CoverageReport,
    DecompositionReport,
    PairCountProfile,
    PointSet,
    check_distance_covers_field,
    check_quotient_covers_field,
    check_quotient_covers_squares,
    cross_sum_decomposition,
    distance_covers_min_size,
    distance_set,
    key_inequality_check,
    pair_count_cross_sum,
    pair_count_profile,
    pair_counts_spectral,
    quotient_set,
    subfield_construction,
    zero_count_spectral,
)
from .errors import (
    BelowThreshold,
    CapExceeded,
    ClosedFormMismatch,
    DistquotError,
    DivisionByZero,
    EmptySet,
    EvenDimension,
    NotOddPrime,
    OddDimension,
    PointSetParseError,
)
from .field import ELEMENT_CAP, FieldCtx, FieldSpec, build_field
from .fourier import (
    GridFunction,
    OrthogonalityResult,
    SphereHatTable,
    forward_transform,
    forward_transform_direct,
    inverse_transform,
    plancherel_check,
    size_weighted_hat_sum,
    sphere_hat_closed,
    sphere_hat_orthogonality,
    sphere_hat_table,
    sum_sphere_hat_over_radii,
    weighted_sphere_hat_sum,
    zero_sphere_hat_max,
)
from .geometry import (
    GRID_CAP,
    GridDomain,
    SphereTable,
    build_sphere_table,
    index_point,
    norm_array,
    point_index,
    sphere_size_closed,
    vector_norm,
)
from .harness import ExperimentConfig, run, run_nu, run_sharpness, run_theorem, run_verify
from .rng import SplitMix64, sample_without_replacement
