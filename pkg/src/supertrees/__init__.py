"""k-uniform supertrees with boundary: Dirichlet spectra, spiral-like
orderings, structure rewiring, and exhaustive Faber-Krahn verification."""

from .config import DEFAULT_SEED, DEFAULT_TOLERANCES, Config, Tolerances
from .core import (
    BoundaryPartition,
    CanonicalCode,
    DegreeSequence,
    LevelStructure,
    Supertree,
    VertexId,
    apply_vertex_permutation,
    boundary_partition,
    build_supertree,
    canonical_code,
    degree_sequence,
    distance,
    is_isomorphic,
    level_structure,
    parse_sht,
    serialize_sht,
)
from .enumeration import (
    FamilySpec,
    FkCertificate,
    enumerate_family,
    enumerate_supertrees,
    feasible_degree_sequences,
    fk1_sweep,
    fk2_sweep,
    verify_fk_theorem1,
    verify_fk_theorem2,
    verify_majorization_monotonicity,
)
from .errors import (
    BadVertexId,
    ContainsCycle,
    ConvergenceFailure,
    DegreeTooSmall,
    Disconnected,
    DuplicateEdge,
    EdgeOverlapTooLarge,
    EmptyFamily,
    IndexOutOfRange,
    InfeasibleDegreeSequence,
    InvalidSpec,
    LengthMismatch,
    NoInteriorVertices,
    NotAnEigenfunction,
    NotAPermutation,
    NotKUniform,
    NotMajorized,
    ResultNotSupertree,
    ShtFormatError,
    SupertreeError,
    ZeroFunction,
)
from .slo import (
    SloViolation,
    VertexLabel,
    check_slo,
    construct_slo_supertree,
    find_slo_ordering,
    relabel,
    relabel_ordering,
)
from .spectral import (
    DirichletEigenpair,
    DirichletLaplacian,
    assemble_laplacian,
    dirichlet_laplacian,
    first_dirichlet_eigenpair,
    jacobi_eigh,
    rayleigh_quotient,
)
from .transforms import (
    HypothesisCheck,
    ShiftSpec,
    SwitchSpec,
    apply_shift,
    apply_switch,
    check_shift_hypothesis,
    check_switch_hypothesis,
    majorizes,
    unit_transform_chain,
    unit_transformation,
)

__version__ = "0.1.0"

__all__ = [
    "BadVertexId",
    "BoundaryPartition",
    "CanonicalCode",
    "Config",
    "ContainsCycle",
    "ConvergenceFailure",
    "DEFAULT_SEED",
    "DEFAULT_TOLERANCES",
    "DegreeSequence",
    "DegreeTooSmall",
    "DirichletEigenpair",
    "DirichletLaplacian",
    "Disconnected",
    "DuplicateEdge",
    "EdgeOverlapTooLarge",
    "EmptyFamily",
    "FamilySpec",
    "FkCertificate",
    "HypothesisCheck",
    "IndexOutOfRange",
    "InfeasibleDegreeSequence",
    "InvalidSpec",
    "LengthMismatch",
    "LevelStructure",
    "NoInteriorVertices",
    "NotAPermutation",
    "NotAnEigenfunction",
    "NotKUniform",
    "NotMajorized",
    "ResultNotSupertree",
    "ShtFormatError",
    "SloViolation",
    "Supertree",
    "SupertreeError",
    "SwitchSpec",
    "ShiftSpec",
    "Tolerances",
    "VertexId",
    "VertexLabel",
    "ZeroFunction",
    "apply_shift",
    "apply_switch",
    "apply_vertex_permutation",
    "assemble_laplacian",
    "boundary_partition",
    "build_supertree",
    "canonical_code",
    "check_shift_hypothesis",
    "check_slo",
    "check_switch_hypothesis",
    "construct_slo_supertree",
    "degree_sequence",
    "dirichlet_laplacian",
    "distance",
    "enumerate_family",
    "enumerate_supertrees",
    "feasible_degree_sequences",
    "find_slo_ordering",
    "first_dirichlet_eigenpair",
    "fk1_sweep",
    "fk2_sweep",
    "is_isomorphic",
    "jacobi_eigh",
    "level_structure",
    "majorizes",
    "parse_sht",
    "rayleigh_quotient",
    "relabel",
    "relabel_ordering",
    "serialize_sht",
    "unit_transform_chain",
    "unit_transformation",
    "verify_fk_theorem1",
    "verify_fk_theorem2",
    "verify_majorization_monotonicity",
]
