"""Cycle embedding in the spined and bijective cube families SSQ_n and BSQ_n.

Vertices are ints whose bit ``i`` is label bit ``u_i``; text labels are
written most significant bit first.
"""

from .automorphisms import Automorphism, bsq_translation, group_swap, ssq_translation, translation
from .embedding import (
    bsq_bipancycle,
    bsq_edge_cycle32,
    bsq_ham_cycle_edge,
    edge_cycle,
    expansion_plan,
    ham_cycle_edge,
    pancycle,
    ssq_edge_cycle16,
    ssq_ham_cycle_edge,
    ssq_pancycle,
)
from .errors import CubeCycleError
from .oracle import (
    VerificationReport,
    find_cycle_dfs,
    find_ham_path,
    graph_report,
    pancyclicity_sweep,
    verify_automorphism,
    verify_cycle,
)
from .topology import CubeGraph, Family, label_text, parse_label, validate_label
from .walk import Walk, splice

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "CubeCycleError",
    "CubeGraph",
    "Family",
    "VerificationReport",
    "Walk",
    "bsq_bipancycle",
    "bsq_edge_cycle32",
    "bsq_ham_cycle_edge",
    "bsq_translation",
    "edge_cycle",
    "expansion_plan",
    "find_cycle_dfs",
    "find_ham_path",
    "graph_report",
    "group_swap",
    "ham_cycle_edge",
    "label_text",
    "pancycle",
    "pancyclicity_sweep",
    "parse_label",
    "splice",
    "ssq_edge_cycle16",
    "ssq_ham_cycle_edge",
    "ssq_pancycle",
    "ssq_translation",
    "translation",
    "validate_label",
    "verify_automorphism",
    "verify_cycle",
]
