"""
Exhaustive enumeration of stable graphs of type (g, n)

Vertex types (g_v, n_v) are chosen so that their Euler weights
2(g_v - 1) + n_v add up to 2(g - 1) + n; this bounds the number of vertices
and edges. The legs are then distributed over the vertices, the remaining
flags paired into edges through a symmetric adjacency matrix, and the
connected results deduplicated by canonical form.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterator, List, Sequence, Tuple

import networkx as nx
from tqdm import tqdm

from ..core.errors import PreconditionError
from .canonical import CanonicalForm, canonicalize
from .graph import StableGraph

logger = logging.getLogger(__name__)

VertexType = Tuple[int, int]


@dataclass(frozen=True)
class GraphClass:
    """An isomorphism class with a representative and its automorphism group order"""
    representative: StableGraph
    form: CanonicalForm

    @property
    def aut_order(self) -> int:
        return self.form.aut_order

    @property
    def key(self) -> str:
        return self.form.key

    @property
    def num_edges(self) -> int:
        return len(self.representative.edges)


def vertex_types(max_weight: int) -> List[VertexType]:
    """Stable (g_v, n_v) with Euler weight between 1 and max_weight"""
    types = []
    for w in range(1, max_weight + 1):
        for g in range(0, w // 2 + 2):
            n = w - 2 * (g - 1)
            if n >= 0:
                types.append((g, n))
    return sorted(types)


def _multisets(types: Sequence[VertexType], target: int, genus_budget: int,
               start: int = 0) -> Iterator[Tuple[VertexType, ...]]:
    if target == 0:
        yield ()
        return
    for i in range(start, len(types)):
        g, n = types[i]
        w = 2 * (g - 1) + n
        if w > target or g > genus_budget:
            continue
        for rest in _multisets(types, target - w, genus_budget - g, i):
            yield (types[i],) + rest


def _leg_splits(types: Sequence[VertexType], n: int, index: int = 0) -> Iterator[Tuple[int, ...]]:
    if index == len(types):
        if n == 0:
            yield ()
        return
    top = min(n, types[index][1])
    for legs in range(top, -1, -1):
        for rest in _leg_splits(types, n - legs, index + 1):
            yield (legs,) + rest


def _ordered(types: Sequence[VertexType], legs: Sequence[int]) -> bool:
    # vertices of equal type carry non-increasing leg counts
    return all(not (types[i] == types[i + 1] and legs[i] < legs[i + 1]) for i in range(len(types) - 1))


def _adjacencies(stubs: List[int]) -> Iterator[Dict[Tuple[int, int], int]]:
    V = len(stubs)
    pairs = [(i, j) for i in range(V) for j in range(i, V)]
    remaining = list(stubs)
    chosen: Dict[Tuple[int, int], int] = {}

    def fill(k: int) -> Iterator[Dict[Tuple[int, int], int]]:
        if k == len(pairs):
            if not any(remaining):
                yield dict(chosen)
            return
        i, j = pairs[k]
        if j == i and k > 0 and pairs[k - 1][0] == i - 1 and remaining[i - 1]:
            return
        top = remaining[i] // 2 if i == j else min(remaining[i], remaining[j])
        for c in range(top, -1, -1):
            if i == j:
                remaining[i] -= 2 * c
            else:
                remaining[i] -= c
                remaining[j] -= c
            if c:
                chosen[(i, j)] = c
            yield from fill(k + 1)
            chosen.pop((i, j), None)
            if i == j:
                remaining[i] += 2 * c
            else:
                remaining[i] += c
                remaining[j] += c

    yield from fill(0)


def _connected(V: int, adjacency: Dict[Tuple[int, int], int]) -> bool:
    graph = nx.Graph()
    graph.add_nodes_from(range(V))
    graph.add_edges_from(pair for pair, c in adjacency.items() if c and pair[0] != pair[1])
    return nx.is_connected(graph)


def _assemble(types: Sequence[VertexType], legs: Sequence[int],
              adjacency: Dict[Tuple[int, int], int]) -> StableGraph:
    vertex_of: List[int] = []
    free: List[List[int]] = []
    leg_flags: List[int] = []
    for v, ((_, n_v), l_v) in enumerate(zip(types, legs)):
        flags = list(range(len(vertex_of), len(vertex_of) + n_v))
        vertex_of.extend([v] * n_v)
        leg_flags.extend(flags[:l_v])
        free.append(flags[l_v:])
    involution = list(range(len(vertex_of)))
    for (i, j), count in sorted(adjacency.items()):
        for _ in range(count):
            a = free[i].pop(0)
            b = free[j].pop(0)
            involution[a], involution[b] = b, a
    labels = {f: k + 1 for k, f in enumerate(leg_flags)}
    return StableGraph(involution, vertex_of, [g for g, _ in types], labels)


def _unlabelled_classes(g: int, n: int, progress: bool) -> List[StableGraph]:
    target = 2 * (g - 1) + n
    types = vertex_types(target)
    found: Dict[tuple, StableGraph] = {}
    multisets = list(_multisets(types, target, g))
    for multiset in tqdm(multisets, desc=f"graphs ({g},{n})", disable=not progress):
        flags = sum(n_v for _, n_v in multiset)
        if flags < n or (flags - n) % 2:
            continue
        if (flags - n) // 2 < len(multiset) - 1:
            continue
        for legs in _leg_splits(multiset, n):
            if not _ordered(multiset, legs):
                continue
            stubs = [n_v - l_v for (_, n_v), l_v in zip(multiset, legs)]
            for adjacency in _adjacencies(stubs):
                if not _connected(len(multiset), adjacency):
                    continue
                graph = _assemble(multiset, legs, adjacency)
                form = canonicalize(graph, use_labels=False)
                found.setdefault(form.certificate, graph)
    return list(found.values())


def _label_orbits(G: StableGraph, automorphisms: Sequence[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    legs = G.legs
    position = {f: i for i, f in enumerate(legs)}
    seen = set()
    representatives = []
    for labelling in permutations(range(1, len(legs) + 1)):
        if labelling in seen:
            continue
        representatives.append(labelling)
        for gamma in automorphisms:
            moved = [0] * len(legs)
            for i, f in enumerate(legs):
                moved[position[gamma[f]]] = labelling[i]
            seen.add(tuple(moved))
    return representatives


@lru_cache(maxsize=None)
def enumerate_graphs(g: int, n: int, legs_labelled: bool = True,
                     progress: bool = False) -> Tuple[GraphClass, ...]:
    """
    All isomorphism classes of stable graphs of genus g with n legs

    Args:
        g: genus
        n: number of legs
        legs_labelled: classes up to label-preserving isomorphism; otherwise
            legs are interchangeable and automorphisms may permute them
        progress: show a progress bar on stderr

    Returns:
        Classes sorted by (edges, vertices, key), each with its |Aut|
    """
    if g < 0 or n < 0 or 2 * (g - 1) + n <= 0:
        raise PreconditionError(f"(g,n) = ({g},{n}) is not stable")
    unlabelled = _unlabelled_classes(g, n, progress)
    classes: List[GraphClass] = []
    for graph in unlabelled:
        if not legs_labelled:
            bare = graph.unlabelled()
            classes.append(GraphClass(bare, canonicalize(bare, use_labels=False)))
            continue
        plus = canonicalize(graph, use_labels=False)
        for labelling in _label_orbits(graph, plus.automorphisms):
            rep = graph.with_labels({f: labelling[i] for i, f in enumerate(graph.legs)})
            classes.append(GraphClass(rep, canonicalize(rep)))
    classes.sort(key=lambda c: (c.num_edges, c.representative.num_vertices, c.key))
    logger.info(f"Enumerated {len(classes)} {'labelled' if legs_labelled else 'unlabelled'} "
                f"classes of type ({g},{n})")
    return tuple(classes)


def enumerate_trees(n: int, legs_labelled: bool = True) -> Tuple[GraphClass, ...]:
    """Stable trees with n legs (the genus-0 classes)"""
    return enumerate_graphs(0, n, legs_labelled)
