"""genusforge: minimum-genus embeddings of K_{n,n} with a Hamiltonian face.

The package builds explicit rotation systems whose genus meets the
ceil((n-1)(n-2)/4) lower bound for even n, verifies arbitrary rotation
systems by face tracing, searches the constrained embedding space, and
models complete road interchanges as embedded bipartite multigraphs.
"""

from .maps import (
    AsymmetricAdjacencyError,
    CombinatorialMap,
    DisconnectedError,
    DuplicateNeighborError,
    FaceCensus,
    MapError,
    NegativeGenusError,
    NotInvolutionError,
    OrbitOriginMismatchError,
    SelfLoopError,
    genus,
    map_from_darts,
    map_from_rotations,
    reverse_orientation,
    trace_faces,
)
from .construct import (
    ChordDiagram,
    ConstructionResult,
    OddNError,
    chord_diagram,
    construct,
    construct_mod0,
    construct_mod2,
    glue_embeddings,
    l_of_n,
)
from .ringel import (
    BipartiteLabeling,
    OddPartSizeError,
    PartsNotEqualError,
    SpecialFaceFamily,
    build_ringel_embedding,
    identity_labeling,
    lower_bound_lnm,
    special_faces,
)
from .search import (
    SearchReport,
    SpaceTooLargeError,
    candidate_space_size,
    canonical_form,
    enumerate_candidates,
    exhaustive_search,
    randomized_search,
    rotations_from_canonical,
)
from .interchange import (
    Interchange,
    InterchangeError,
    OptimalityVerdict,
    StuckError,
    add_lane,
    bridges,
    from_embedding,
    h_darts_from_cycle,
    is_complete,
    optimality_check,
    remove_parallel_edge,
    simplify_to_complete,
)
from .formats import (
    RotationFileError,
    census_report,
    dump_json,
    map_from_rotation_file,
    parse_rotation_file,
    search_report,
    serialize_rotation_file,
)
from .figures import render_chord_diagram

__all__ = [
    "AsymmetricAdjacencyError",
    "BipartiteLabeling",
    "ChordDiagram",
    "CombinatorialMap",
    "ConstructionResult",
    "DisconnectedError",
    "DuplicateNeighborError",
    "FaceCensus",
    "Interchange",
    "InterchangeError",
    "MapError",
    "NegativeGenusError",
    "NotInvolutionError",
    "OddNError",
    "OddPartSizeError",
    "OptimalityVerdict",
    "OrbitOriginMismatchError",
    "PartsNotEqualError",
    "RotationFileError",
    "SearchReport",
    "SelfLoopError",
    "SpaceTooLargeError",
    "SpecialFaceFamily",
    "StuckError",
    "add_lane",
    "bridges",
    "build_ringel_embedding",
    "candidate_space_size",
    "canonical_form",
    "census_report",
    "chord_diagram",
    "construct",
    "construct_mod0",
    "construct_mod2",
    "dump_json",
    "enumerate_candidates",
    "exhaustive_search",
    "from_embedding",
    "genus",
    "glue_embeddings",
    "h_darts_from_cycle",
    "identity_labeling",
    "is_complete",
    "l_of_n",
    "lower_bound_lnm",
    "map_from_darts",
    "map_from_rotation_file",
    "map_from_rotations",
    "optimality_check",
    "parse_rotation_file",
    "randomized_search",
    "remove_parallel_edge",
    "render_chord_diagram",
    "reverse_orientation",
    "search_report",
    "serialize_rotation_file",
    "simplify_to_complete",
    "special_faces",
    "trace_faces",
]

__version__ = "0.1.0"
