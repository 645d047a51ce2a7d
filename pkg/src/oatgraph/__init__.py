"""Recognition, canonical colouring, and recolouring paths for graphs built
by union, join, comparable-vertex, and clique-attachment operations, plus
brute-force oracles and generators for testing at desk scale.
"""

from .buildtree import (
    BuildTree,
    CliqueAttach,
    Comparable,
    Join,
    Leaf,
    Union,
    canonical_assignment,
    canonical_colouring,
    chi_omega,
    replay,
    tree_from_json,
    tree_to_json,
    validate,
    walk_postorder,
)
from .colouring import Colouring, Palette, colouring_from_json, colouring_to_json
from .errors import (
    ColouringError,
    GraphFormatError,
    MalformedTreeError,
    OatGraphError,
    PaletteError,
    PaletteTooSmallError,
    PartitionError,
    SizeBudgetError,
    StepConsistencyError,
)
from .generators import (
    CLASSIC_FAMILIES,
    FIXTURE_NAMES,
    Fixture,
    classic,
    fixture,
    p4_sparse_third_op,
    random_oat,
)
from .graph import (
    AdjSquare,
    Graph,
    adjacency_square,
    clique_attachment,
    complement_components,
    connected_components,
    cut_vertices,
    find_comparable_pair,
    format_graph,
    parse_graph,
)
from .oracle import (
    ReconfigGraph,
    ReconfigStats,
    brute_chi,
    brute_is_oat,
    brute_omega,
    build_reconfig,
    is_frozen,
    random_colouring,
    reconfig_stats,
)
from .recognition import DeconstructionStep, RecognitionOutcome, a2_after_step, recognize
from .recolouring import (
    RecolouringSequence,
    SequenceReport,
    Step,
    find_path,
    rename,
    sequence_from_json,
    sequence_to_json,
    to_canonical,
    verify_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "AdjSquare",
    "BuildTree",
    "CLASSIC_FAMILIES",
    "CliqueAttach",
    "ColouringError",
    "Colouring",
    "Comparable",
    "DeconstructionStep",
    "FIXTURE_NAMES",
    "Fixture",
    "Graph",
    "GraphFormatError",
    "Join",
    "Leaf",
    "MalformedTreeError",
    "OatGraphError",
    "Palette",
    "PaletteError",
    "PaletteTooSmallError",
    "PartitionError",
    "RecognitionOutcome",
    "ReconfigGraph",
    "ReconfigStats",
    "RecolouringSequence",
    "SequenceReport",
    "SizeBudgetError",
    "Step",
    "StepConsistencyError",
    "Union",
    "a2_after_step",
    "adjacency_square",
    "brute_chi",
    "brute_is_oat",
    "brute_omega",
    "build_reconfig",
    "canonical_assignment",
    "canonical_colouring",
    "chi_omega",
    "classic",
    "clique_attachment",
    "colouring_from_json",
    "colouring_to_json",
    "complement_components",
    "connected_components",
    "cut_vertices",
    "find_comparable_pair",
    "find_path",
    "fixture",
    "format_graph",
    "is_frozen",
    "p4_sparse_third_op",
    "parse_graph",
    "random_colouring",
    "random_oat",
    "recognize",
    "reconfig_stats",
    "rename",
    "replay",
    "sequence_from_json",
    "sequence_to_json",
    "to_canonical",
    "tree_from_json",
    "tree_to_json",
    "validate",
    "verify_sequence",
    "walk_postorder",
]
