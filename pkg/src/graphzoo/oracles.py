"""
Graph-sum oracles

Direct sums over enumerated stable graphs, computed without any generating
function, to check the plethystic formulas term by term:

    wick_rank_sum:  sum over leg-labelled G of prod_v a(g(v), n(v)) / |Aut G|
    burnside_char:  sum over leg-unlabelled H of 1/|Aut H| sum over a in Aut H
                    of tr(a on V(H)) p_(cycle type of a on the legs)
"""
import logging
from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence, Tuple

from ..exactsym.symfunc import SymFunc
from ..hlaurent.modular import StableCharTable
from .canonical import cycle_type
from .enumerate import enumerate_graphs
from .graph import StableGraph

logger = logging.getLogger(__name__)

TWISTS = ("trivial", "K")


def wick_rank_sum(g: int, n: int, a: Mapping[Tuple[int, int], object]) -> Fraction:
    """
    Wick sum of vertex weights over the leg-labelled classes of type (g, n)

    Computed over leg-unlabelled classes H, each standing for n!/|Aut H|
    labelled classes weighted by their own automorphisms.

    Args:
        g: genus
        n: number of legs
        a: vertex weight per (g_v, n_v); missing types weigh 0
    """
    weights = {key: Fraction(value) for key, value in a.items()}
    total = Fraction(0)
    for graph_class in enumerate_graphs(g, n, legs_labelled=False):
        graph = graph_class.representative
        product = Fraction(1)
        for v in range(graph.num_vertices):
            product *= weights.get(graph.vertex_type(v), Fraction(0))
            if not product:
                break
        if product:
            total += product * Fraction(factorial(n), graph_class.aut_order)
    return total


def _vertex_cycles(graph: StableGraph, perm: Sequence[int]) -> list:
    image = {}
    for v in range(graph.num_vertices):
        flags = graph.flags_at(v)
        image[v] = graph.vertex_of[perm[flags[0]]] if flags else v
    seen, cycles = set(), []
    for v in range(graph.num_vertices):
        if v in seen:
            continue
        cycle = []
        x = v
        while x not in seen:
            seen.add(x)
            cycle.append(x)
            x = image[x]
        cycles.append(cycle)
    return cycles


def _power(perm: Sequence[int], r: int) -> Tuple[int, ...]:
    result = tuple(range(len(perm)))
    for _ in range(r):
        result = tuple(perm[x] for x in result)
    return result


def _edge_sign(graph: StableGraph, perm: Sequence[int]) -> int:
    # (-1)^|E| sgn(a on E) = (-1)^(number of edge cycles)
    edge_of = {}
    for index, (f, s) in enumerate(graph.edges):
        edge_of[f] = edge_of[s] = index
    edge_perm = [edge_of[perm[f]] for f, _ in graph.edges]
    cycles = len(cycle_type(edge_perm, range(len(edge_perm))))
    return -1 if cycles % 2 else 1


def trace_on_vertices(graph: StableGraph, perm: Sequence[int], table: StableCharTable) -> Fraction:
    """
    Trace of an automorphism on the tensor product of vertex modules

    Each cycle of length r on the vertices contributes the character of its
    first vertex at a^r restricted to that vertex's flags.
    """
    trace = Fraction(1)
    for cycle in _vertex_cycles(graph, perm):
        v = cycle[0]
        chi = table.get(*graph.vertex_type(v))
        if chi is None:
            return Fraction(0)
        power = _power(perm, len(cycle))
        trace *= chi.value(cycle_type(power, graph.flags_at(v)))
        if not trace:
            return trace
    return trace


def burnside_char(g: int, n: int, table: StableCharTable, twist: str = "trivial") -> SymFunc:
    """
    Character of the graph sum of type (g, n) as a weight-n symmetric function

    Args:
        g: genus
        n: number of legs
        table: vertex modules
        twist: "trivial", or "K" for the determinant of the edge set, which
            multiplies each trace by (-1)^|E| sgn(a on E)

    Returns:
        Homogeneous symmetric function of weight n
    """
    if twist not in TWISTS:
        raise ValueError(f"Unknown twist '{twist}', expected one of {TWISTS}")
    terms = {}
    for graph_class in enumerate_graphs(g, n, legs_labelled=False):
        graph = graph_class.representative
        order = graph_class.aut_order
        for perm in graph_class.form.automorphisms:
            trace = trace_on_vertices(graph, perm, table)
            if not trace:
                continue
            if twist == "K":
                trace *= _edge_sign(graph, perm)
            tau = cycle_type(perm, graph.legs)
            terms[tau] = terms.get(tau, Fraction(0)) + trace / order
    logger.debug(f"Burnside sum of type ({g},{n}) with twist {twist}: {len(terms)} cycle types")
    return SymFunc(terms, n)
