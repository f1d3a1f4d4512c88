"""Take-Grant protection-graph analysis.

Model an access-control state as a directed graph of subjects and
objects whose arcs carry take/grant/read/write rights, compute islands
(maximal tg-connected subject groups), and decide whether two vertices
are linked by a t-bridge: a simple path through object vertices whose
arcs all carry take, walked with or against arc direction.  A
brute-force oracle and deterministic generators back the test suite;
the ``takegrant`` CLI fronts the library.
"""

from .bridges import (
    BridgePath,
    Direction,
    SearchReport,
    SearchState,
    bridge_exists,
    bridge_exists_faithful,
    bridges_between_islands,
    find_bridge_path,
    report_to_jsonable,
    traversal_set,
    validate_path,
)
from .errors import (
    DuplicateNameError,
    EmptyRightsError,
    EmptySpecError,
    InvalidNameError,
    InvariantViolationError,
    NotASubjectError,
    ParseError,
    SameIslandError,
    SameVertexError,
    TakeGrantError,
    TooLargeError,
    UnknownVertexError,
)
from .graph import (
    RIGHT_ORDER,
    Edge,
    ProtectionGraph,
    Right,
    VertexId,
    VertexKind,
    new_graph,
    parse_graph,
    serialize_graph,
)
from .islands import Island, compute_islands, same_island
from .oracle import (
    RandomGraphSpec,
    SplitMix64,
    brute_force_bridge,
    enumerate_t_arc_graphs,
    random_graph,
)

__version__ = "0.1.0"

__all__ = [
    "BridgePath",
    "Direction",
    "DuplicateNameError",
    "Edge",
    "EmptyRightsError",
    "EmptySpecError",
    "InvalidNameError",
    "InvariantViolationError",
    "Island",
    "NotASubjectError",
    "ParseError",
    "ProtectionGraph",
    "RIGHT_ORDER",
    "RandomGraphSpec",
    "Right",
    "SameIslandError",
    "SameVertexError",
    "SearchReport",
    "SearchState",
    "SplitMix64",
    "TakeGrantError",
    "TooLargeError",
    "UnknownVertexError",
    "VertexId",
    "VertexKind",
    "bridge_exists",
    "bridge_exists_faithful",
    "bridges_between_islands",
    "brute_force_bridge",
    "compute_islands",
    "enumerate_t_arc_graphs",
    "find_bridge_path",
    "new_graph",
    "parse_graph",
    "random_graph",
    "report_to_jsonable",
    "same_island",
    "serialize_graph",
    "traversal_set",
    "validate_path",
]
