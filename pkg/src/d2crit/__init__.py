"""Exhaustive verification toolkit for diameter-2-critical and total-domination-critical graphs."""

from .graph import INFINITE, Graph, build_graph, complement, degree_extremes, diameter, distance
from .graph6 import Graph6Error, decode_graph6, encode_graph6

__all__ = [
    "INFINITE",
    "Graph",
    "Graph6Error",
    "build_graph",
    "complement",
    "decode_graph6",
    "degree_extremes",
    "diameter",
    "distance",
    "encode_graph6",
]
