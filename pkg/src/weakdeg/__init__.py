"""Plane-graph analysis for the weak-degeneracy deletion game."""
from __future__ import annotations

from .core import (
    Face,
    GraphSummary,
    PlaneGraph,
    build_plane_graph,
    graph_summary,
    plane_graph_from_faces,
    remove_vertex,
)
from .cycles import class_membership, enumerate_cycles, structural_audit
from .degeneracy import (
    Delete,
    DeleteSave,
    decide_weak_f_degenerate,
    greedy_degeneracy,
    near_bipartite,
    replay,
    weak_degeneracy,
)
from .discharge import run_rules
from .reductions import constructive_prover, gdp_tree_check

__all__ = [
    "Face",
    "GraphSummary",
    "PlaneGraph",
    "build_plane_graph",
    "graph_summary",
    "plane_graph_from_faces",
    "remove_vertex",
    "class_membership",
    "enumerate_cycles",
    "structural_audit",
    "Delete",
    "DeleteSave",
    "decide_weak_f_degenerate",
    "greedy_degeneracy",
    "near_bipartite",
    "replay",
    "weak_degeneracy",
    "run_rules",
    "constructive_prover",
    "gdp_tree_check",
]

__version__ = "0.1.0"
