"""sghom: exact homomorphism and switching-homomorphism tools for signed
(2-edge-coloured) graphs, with gadget reductions and a claims harness."""

from .core import (
    EdgeColouredGraph,
    RotationSystem,
    StructuralStats,
    is_balanced,
    stats,
    switch,
    switching_equivalent,
    validate_graph,
)
from .embedding import FaceReport, certify_embedding
from .hom import (
    SearchConfig,
    SHomWitness,
    check_hom,
    core_of,
    enumerate_homs,
    find_hom,
    find_iso,
    find_shom,
    score_of,
)

__all__ = [
    "EdgeColouredGraph",
    "RotationSystem",
    "StructuralStats",
    "FaceReport",
    "SearchConfig",
    "SHomWitness",
    "validate_graph",
    "switch",
    "is_balanced",
    "switching_equivalent",
    "stats",
    "certify_embedding",
    "check_hom",
    "find_hom",
    "enumerate_homs",
    "find_shom",
    "find_iso",
    "core_of",
    "score_of",
]

__version__ = "0.1.0"
