"""Self-stresses and polyhedral liftings of planar polygonal-surface frameworks."""

from .errors import (
    BoundaryVertex,
    DegenerateFace,
    DisconnectedDual,
    DisconnectedSkeleton,
    DuplicateId,
    EdgeOverused,
    FoldMismatch,
    MissingFaceHeight,
    NonSurfaceVertexStar,
    NotAdjacent,
    NotMonodromyFree,
    NotSelfStress,
    ParameterTooSmall,
    ParseError,
    PreconditionViolated,
    RepeatedVertexInFace,
    StressliftError,
    StressRecoveryError,
    UnknownEdgeKey,
    UnknownFace,
    UnknownVertex,
    UnknownVertexRef,
    ValidationError,
    ZeroLengthEdge,
)
from .surface import (
    CotreeLoopBasis,
    FacePath,
    SurfaceComplex,
    TopologyReport,
    cotree_loop_basis,
    edge_key,
    face_orientations,
    topology_report,
    tree_face_path,
    validate_surface,
)
from .stress import (
    Framework,
    StressBasis,
    StressVector,
    equilibrium_residual,
    interior_equilibrium_holds,
    is_self_stress,
    self_stress_basis,
)
from .paths import (
    OrientedFacePath,
    move1,
    move1_inverse,
    move2,
    move2_inverse,
    orient,
    orient_face_path,
    reversed_path,
    vertex_loop,
)
from .lifting import (
    AffineFunction,
    FundamentalDomainLifting,
    LiftingResult,
    MonodromyMatrix,
    ZERO_FUNCTION,
    edge_line_form,
    elementary_lift,
    fundamental_domain_lifting,
    lift_all_faces,
    monodromy_free_basis,
    monodromy_matrix,
    path_lift,
    recover_stress,
    stress_monodromy_rank,
)

__version__ = "0.1.0"
