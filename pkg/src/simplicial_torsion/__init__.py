"""Simple-homotopy invariants of finite simplicial complexes and maps.

Integral homology, elementary collapses, fiberwise acyclicity of simplicial
maps, and Whitehead torsion with coefficients in Z[Z/n].
"""

from .collapse import CollapseSequence, free_faces, greedy_collapse, is_collapsible
from .complex import SimplicialComplex, close_downward, closed_star, full_simplex, simplex_boundary
from .cover import CyclicCoverLabeling, twisted_chain_complex
from .groupring import GroupRingElement, WhiteheadClass
from .homology import homology, reduced_homology
from .localprofile import is_locally_acyclic, local_profile
from .simpmap import SimplicialMap, simplicial_map
from .torsion import whitehead_torsion

__version__ = "0.1.0"

__all__ = [
    "CollapseSequence",
    "CyclicCoverLabeling",
    "GroupRingElement",
    "SimplicialComplex",
    "SimplicialMap",
    "WhiteheadClass",
    "close_downward",
    "closed_star",
    "free_faces",
    "full_simplex",
    "greedy_collapse",
    "homology",
    "is_collapsible",
    "is_locally_acyclic",
    "local_profile",
    "reduced_homology",
    "simplex_boundary",
    "simplicial_map",
    "twisted_chain_complex",
    "whitehead_torsion",
]
