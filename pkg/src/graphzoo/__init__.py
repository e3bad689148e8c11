"""
Stable graphs: validation, contraction, canonical forms, enumeration and
the graph-sum oracles
"""
from .canonical import CanonicalForm, brute_force_automorphisms, canonicalize, isomorphic
from .enumerate import GraphClass, enumerate_graphs, enumerate_trees
from .graph import StableGraph, build_graph, contract, contract_with_map, corolla, relabel
from .oracles import burnside_char, wick_rank_sum

__all__ = [
    "CanonicalForm",
    "GraphClass",
    "StableGraph",
    "brute_force_automorphisms",
    "build_graph",
    "burnside_char",
    "canonicalize",
    "contract",
    "contract_with_map",
    "corolla",
    "enumerate_graphs",
    "enumerate_trees",
    "isomorphic",
    "relabel",
    "wick_rank_sum",
]
