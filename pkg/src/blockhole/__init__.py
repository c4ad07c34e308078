"""Workbench for generic rigidity of block-and-hole spherical polyhedra."""

from .topology import (Block, Disc, Hole, Polyhedron, TopologicalGraph,
                       TopologyError, check_well_designed, derive_faces,
                       has_clean_boundary, is_long_edge, is_nonfacial_triangle)

__all__ = [
    "Block", "Disc", "Hole", "Polyhedron", "TopologicalGraph", "TopologyError",
    "check_well_designed", "derive_faces", "has_clean_boundary",
    "is_long_edge", "is_nonfacial_triangle",
]
