"""Binomial edge ideals of graphs: Betti tables, depth and Cohen-Macaulay defect.

Two exact oracles (Koszul homology, Schreyer resolution) over GF(p), and
closed-form formulas for cones, joins, wheels and G_{r,b}, checked against them.
"""

from .graphs import Graph, clique_vector, cone, join, parse_family
from .algebra import Ring, groebner, ideal_of_graph, hilbert_function
from .resolution import BettiTable, betti_table, summarize, euler_check
from .formulas import betti_cone_formula, wheel_betti, grb_profile, predict_depth

__all__ = [
    "Graph", "clique_vector", "cone", "join", "parse_family",
    "Ring", "groebner", "ideal_of_graph", "hilbert_function",
    "BettiTable", "betti_table", "summarize", "euler_check",
    "betti_cone_formula", "wheel_betti", "grb_profile", "predict_depth",
]
