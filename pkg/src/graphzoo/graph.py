"""
Stable graphs as flags with an involution and a vertex partition

Edges are the 2-cycles of the involution, legs its fixed points. Every
vertex carries a genus and must be stable: 2(g(v) - 1) + n(v) > 0. The
genus of the graph is the sum of the vertex genera plus the first Betti
number |E| - |V| + 1.
"""
import logging
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from ..core.errors import GraphValidationError

logger = logging.getLogger(__name__)

Flag = int
Edge = Tuple[Flag, Flag]


class StableGraph:
    """
    A connected stable graph

    ``leg_label`` maps every leg flag to a label in 1..n, or is None for a
    graph whose legs are interchangeable.
    """

    __slots__ = ("involution", "vertex_of", "genus", "leg_label", "_flags_at", "_edges", "_legs")

    def __init__(self, involution: Sequence[int], vertex_of: Sequence[int], genus: Sequence[int],
                 leg_label: Optional[Mapping[int, int]] = None):
        self.involution: Tuple[int, ...] = tuple(int(x) for x in involution)
        self.vertex_of: Tuple[int, ...] = tuple(int(x) for x in vertex_of)
        self.genus: Tuple[int, ...] = tuple(int(x) for x in genus)
        self.leg_label: Optional[Dict[int, int]] = (
            None if leg_label is None else {int(f): int(l) for f, l in leg_label.items()}
        )
        self._validate()
        flags_at: List[List[int]] = [[] for _ in self.genus]
        for f, v in enumerate(self.vertex_of):
            flags_at[v].append(f)
        self._flags_at = tuple(tuple(fs) for fs in flags_at)
        self._edges = tuple((f, s) for f, s in enumerate(self.involution) if f < s)
        self._legs = tuple(f for f, s in enumerate(self.involution) if f == s)

    # -- validation --------------------------------------------------------

    def _validate(self):
        F = len(self.involution)
        if len(self.vertex_of) != F:
            raise GraphValidationError(
                "vertex_index", f"vertex_of has {len(self.vertex_of)} entries for {F} flags")
        if not self.genus:
            raise GraphValidationError("vertex_index", "A graph needs at least one vertex")
        for f, s in enumerate(self.involution):
            if not 0 <= s < F or self.involution[s] != f:
                raise GraphValidationError("non_involutive", f"sigma(sigma({f})) != {f}")
        for f, v in enumerate(self.vertex_of):
            if not 0 <= v < len(self.genus):
                raise GraphValidationError("vertex_index", f"Flag {f} points to missing vertex {v}")
        for v, g in enumerate(self.genus):
            if g < 0:
                raise GraphValidationError("genus", f"Vertex {v} has negative genus {g}")
        valence = [0] * len(self.genus)
        for v in self.vertex_of:
            valence[v] += 1
        for v, (g, n) in enumerate(zip(self.genus, valence)):
            if 2 * (g - 1) + n <= 0:
                raise GraphValidationError("unstable", f"Vertex {v} of type ({g},{n}) is unstable")
        legs = [f for f, s in enumerate(self.involution) if f == s]
        if self.leg_label is not None:
            if set(self.leg_label) != set(legs):
                raise GraphValidationError("leg_labels", "Labels must be given exactly on the legs")
            if sorted(self.leg_label.values()) != list(range(1, len(legs) + 1)):
                raise GraphValidationError("leg_labels", f"Leg labels must be 1..{len(legs)}")
        if not nx.is_connected(self.to_networkx()):
            raise GraphValidationError("disconnected", "The graph is not connected")

    # -- structure ---------------------------------------------------------

    @property
    def num_flags(self) -> int:
        return len(self.involution)

    @property
    def num_vertices(self) -> int:
        return len(self.genus)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def legs(self) -> Tuple[Flag, ...]:
        return self._legs

    @property
    def n(self) -> int:
        return len(self._legs)

    @property
    def labelled(self) -> bool:
        return self.leg_label is not None

    def flags_at(self, v: int) -> Tuple[Flag, ...]:
        return self._flags_at[v]

    def valence(self, v: int) -> int:
        return len(self._flags_at[v])

    def vertex_type(self, v: int) -> Tuple[int, int]:
        return self.genus[v], self.valence(v)

    @property
    def b1(self) -> int:
        return len(self._edges) - self.num_vertices + 1

    @property
    def total_genus(self) -> int:
        return sum(self.genus) + self.b1

    @property
    def euler_weight(self) -> int:
        """2(g - 1) + n"""
        return 2 * (self.total_genus - 1) + self.n

    def is_tree(self) -> bool:
        return self.b1 == 0 and not any(self.genus)

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(len(self.genus)))
        for f, s in enumerate(self.involution):
            if f < s:
                graph.add_edge(self.vertex_of[f], self.vertex_of[s], key=f)
        return graph

    def unlabelled(self) -> "StableGraph":
        return StableGraph(self.involution, self.vertex_of, self.genus, None)

    def with_labels(self, leg_label: Mapping[int, int]) -> "StableGraph":
        return StableGraph(self.involution, self.vertex_of, self.genus, leg_label)

    def to_dict(self) -> Dict:
        data = {
            "flags": self.num_flags,
            "involution": list(self.involution),
            "vertex_of": list(self.vertex_of),
            "genus": list(self.genus),
        }
        if self.leg_label is not None:
            data["legs"] = {str(f): label for f, label in sorted(self.leg_label.items())}
        return data

    @classmethod
    def from_dict(cls, data: Mapping) -> "StableGraph":
        flags = int(data.get("flags", len(data["involution"])))
        if flags != len(data["involution"]):
            raise GraphValidationError("non_involutive", f"flags={flags} but involution has "
                                                         f"{len(data['involution'])} entries")
        legs = data.get("legs")
        return cls(data["involution"], data["vertex_of"], data["genus"],
                   None if legs is None else {int(f): int(l) for f, l in legs.items()})

    def __eq__(self, other):
        if not isinstance(other, StableGraph):
            return NotImplemented
        return (self.involution == other.involution and self.vertex_of == other.vertex_of
                and self.genus == other.genus and self.leg_label == other.leg_label)

    def __hash__(self):
        labels = None if self.leg_label is None else tuple(sorted(self.leg_label.items()))
        return hash((self.involution, self.vertex_of, self.genus, labels))

    def __repr__(self):
        return (f"StableGraph(V={self.num_vertices}, E={len(self._edges)}, n={self.n}, "
                f"g={self.total_genus})")


def build_graph(raw: Mapping) -> StableGraph:
    """Validate raw graph data (the JSON graph document) into a StableGraph"""
    return StableGraph.from_dict(raw)


def corolla(g: int, n: int, labelled: bool = True) -> StableGraph:
    """The one-vertex graph of type (g, n)"""
    labels = {f: f + 1 for f in range(n)} if labelled else None
    return StableGraph(list(range(n)), [0] * n, [g], labels)


def relabel(G: StableGraph, permutation: Sequence[int],
            vertex_permutation: Optional[Sequence[int]] = None) -> StableGraph:
    """
    The same graph with flag f renamed permutation[f] (and vertex v renamed
    vertex_permutation[v])
    """
    F = G.num_flags
    if sorted(permutation) != list(range(F)):
        raise ValueError("Not a permutation of the flags")
    vperm = list(range(G.num_vertices)) if vertex_permutation is None else list(vertex_permutation)
    involution = [0] * F
    vertex_of = [0] * F
    for f in range(F):
        involution[permutation[f]] = permutation[G.involution[f]]
        vertex_of[permutation[f]] = vperm[G.vertex_of[f]]
    genus = [0] * G.num_vertices
    for v, g in enumerate(G.genus):
        genus[vperm[v]] = g
    labels = None if G.leg_label is None else {permutation[f]: l for f, l in G.leg_label.items()}
    return StableGraph(involution, vertex_of, genus, labels)


def _edge_flags(G: StableGraph, edges: Iterable[Union[int, Sequence[int]]]) -> List[Edge]:
    out = []
    for item in edges:
        if isinstance(item, int):
            f, s = item, G.involution[item] if 0 <= item < G.num_flags else item
        else:
            f, s = (int(x) for x in item)
        if not (0 <= f < G.num_flags and 0 <= s < G.num_flags) or f == s or G.involution[f] != s:
            raise GraphValidationError("not_an_edge", f"{item} is not an edge of the graph")
        out.append((min(f, s), max(f, s)))
    return sorted(set(out))


def contract_with_map(G: StableGraph, edges: Iterable[Union[int, Sequence[int]]]
                      ) -> Tuple[StableGraph, Dict[Flag, Flag]]:
    """
    Contract a set of edges

    Args:
        G: stable graph
        edges: edges given by one of their flags or by their flag pair

    Returns:
        The contracted graph and the map from surviving old flags to new flags
    """
    contracted = _edge_flags(G, edges)
    if not contracted:
        return G, {f: f for f in range(G.num_flags)}
    removed = {f for edge in contracted for f in edge}

    merge = nx.MultiGraph()
    merge.add_nodes_from(range(G.num_vertices))
    merge.add_edges_from((G.vertex_of[f], G.vertex_of[s]) for f, s in contracted)
    components = sorted((sorted(c) for c in nx.connected_components(merge)), key=lambda c: c[0])

    new_vertex: Dict[int, int] = {}
    genus: List[int] = []
    for index, component in enumerate(components):
        members = set(component)
        inner = sum(1 for f, s in contracted if G.vertex_of[f] in members)
        for v in component:
            new_vertex[v] = index
        # contracted part keeps its genus: sum g(v) + b_1
        genus.append(sum(G.genus[v] for v in component) + inner - len(component) + 1)

    surviving = [f for f in range(G.num_flags) if f not in removed]
    flag_map = {f: i for i, f in enumerate(surviving)}
    involution = [flag_map[G.involution[f]] for f in surviving]
    vertex_of = [new_vertex[G.vertex_of[f]] for f in surviving]
    labels = None if G.leg_label is None else {flag_map[f]: l for f, l in G.leg_label.items()}
    result = StableGraph(involution, vertex_of, genus, labels)
    logger.debug(f"Contracted {len(contracted)} edges: {G!r} -> {result!r}")
    return result, flag_map


def contract(G: StableGraph, edges: Iterable[Union[int, Sequence[int]]]) -> StableGraph:
    return contract_with_map(G, edges)[0]
