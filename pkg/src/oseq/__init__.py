"""Negative orientable and orientable sequences from enlarged pseudoweight edge sets."""
from .alphabet import InvariantError, Params
from .graph import EdgeSet, Sequence, build_E, build_X, eulerian_circuit, nos_from_X
from .lift import lift_edges, os_from_X

__all__ = [
    "EdgeSet",
    "InvariantError",
    "Params",
    "Sequence",
    "build_E",
    "build_X",
    "eulerian_circuit",
    "lift_edges",
    "nos_from_X",
    "os_from_X",
]
