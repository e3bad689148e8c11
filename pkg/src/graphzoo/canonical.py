"""
Canonical labelling and automorphism groups of stable graphs

Colour refinement runs over flags. The initial colour of a flag records
whether it is a leg, its label, and the genus and valence of its vertex; a
round of refinement adds the colour of the involution partner and the
sorted colours of the flags at the same vertex. When refinement stalls the
first smallest non-singleton cell is split by individualising each of its
flags in turn, and the whole search tree is explored.

Each leaf of the tree is a total order of the flags. Its certificate lists,
in that order, the position of the involution partner, the leg label, the
vertex genus and the vertex index in order of first appearance. The
smallest certificate is the canonical form; the leaves sharing it differ by
exactly the automorphisms of the graph.
"""
import hashlib
import logging
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .graph import StableGraph

logger = logging.getLogger(__name__)

Colouring = Tuple[int, ...]
Certificate = Tuple[Tuple[int, int, int, int], ...]
Permutation = Tuple[int, ...]


class CanonicalForm:
    """
    Canonical key and automorphism group of a stable graph

    ``labelling[f]`` is the canonical position of flag f. ``automorphisms``
    lists every automorphism as a flag permutation; ``generators`` is a
    generating subset of it.
    """

    __slots__ = ("certificate", "key", "labelling", "automorphisms", "generators")

    def __init__(self, certificate: Certificate, labelling: Permutation,
                 automorphisms: Tuple[Permutation, ...], generators: Tuple[Permutation, ...]):
        self.certificate = certificate
        self.key = hashlib.sha256(repr(certificate).encode("ascii")).hexdigest()
        self.labelling = labelling
        self.automorphisms = automorphisms
        self.generators = generators

    @property
    def aut_order(self) -> int:
        return len(self.automorphisms)

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.certificate == other.certificate

    def __hash__(self):
        return hash(self.certificate)

    def __repr__(self):
        return f"CanonicalForm(key={self.key[:12]}, |Aut|={self.aut_order})"


def _rank(signatures: Sequence) -> Colouring:
    order = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
    return tuple(order[sig] for sig in signatures)


def _initial_colouring(G: StableGraph, use_labels: bool) -> Colouring:
    signatures = []
    for f in range(G.num_flags):
        v = G.vertex_of[f]
        is_leg = G.involution[f] == f
        label = G.leg_label[f] if (use_labels and is_leg and G.leg_label is not None) else 0
        signatures.append((0 if is_leg else 1, label, G.genus[v], G.valence(v)))
    return _rank(signatures)


def _refine(G: StableGraph, colours: Colouring) -> Colouring:
    while True:
        signatures = []
        for f in range(G.num_flags):
            around = tuple(sorted(colours[x] for x in G.flags_at(G.vertex_of[f])))
            signatures.append((colours[f], colours[G.involution[f]], around))
        refined = _rank(signatures)
        if len(set(refined)) == len(set(colours)):
            return refined
        colours = refined


def _target_cell(colours: Colouring) -> Optional[List[int]]:
    cells: Dict[int, List[int]] = {}
    for f, c in enumerate(colours):
        cells.setdefault(c, []).append(f)
    multi = [(len(members), c) for c, members in cells.items() if len(members) > 1]
    if not multi:
        return None
    _, colour = min(multi)
    return cells[colour]


def _individualise(colours: Colouring, flag: int) -> Colouring:
    return _rank([(c, 0 if f == flag else 1) for f, c in enumerate(colours)])


def _leaves(G: StableGraph, colours: Colouring) -> Iterator[Colouring]:
    colours = _refine(G, colours)
    cell = _target_cell(colours)
    if cell is None:
        yield colours
        return
    for flag in cell:
        yield from _leaves(G, _individualise(colours, flag))


def _certificate(G: StableGraph, position: Colouring, use_labels: bool) -> Certificate:
    order = sorted(range(G.num_flags), key=lambda f: position[f])
    vertex_index: Dict[int, int] = {}
    rows = []
    for f in order:
        v = G.vertex_of[f]
        if v not in vertex_index:
            vertex_index[v] = len(vertex_index)
        label = G.leg_label.get(f, 0) if (use_labels and G.leg_label is not None) else 0
        rows.append((position[G.involution[f]], label, G.genus[v], vertex_index[v]))
    return tuple(rows)


def _compose(a: Permutation, b: Permutation) -> Permutation:
    # (a o b)(f) = a(b(f))
    return tuple(a[x] for x in b)


def _closure(generators: Sequence[Permutation], identity: Permutation) -> set:
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for element in frontier:
            for gen in generators:
                candidate = _compose(gen, element)
                if candidate not in group:
                    group.add(candidate)
                    nxt.append(candidate)
        frontier = nxt
    return group


def _generators(elements: Sequence[Permutation], identity: Permutation) -> Tuple[Permutation, ...]:
    chosen: List[Permutation] = []
    group = {identity}
    for element in sorted(elements):
        if element not in group:
            chosen.append(element)
            group = _closure(chosen, identity)
    return tuple(chosen)


def canonicalize(G: StableGraph, use_labels: bool = True) -> CanonicalForm:
    """
    Canonical form of G

    Args:
        G: stable graph
        use_labels: distinguish legs by their labels (ignored for unlabelled graphs)

    Returns:
        CanonicalForm with the key and the full automorphism group
    """
    if G.num_flags == 0:
        certificate: Certificate = ((-1, 0, G.genus[0], 0),)
        return CanonicalForm(certificate, (), ((),), ())
    best: Optional[Certificate] = None
    best_leaves: List[Colouring] = []
    for leaf in _leaves(G, _initial_colouring(G, use_labels)):
        cert = _certificate(G, leaf, use_labels)
        if best is None or cert < best:
            best, best_leaves = cert, [leaf]
        elif cert == best:
            best_leaves.append(leaf)
    reference = best_leaves[0]
    inverse = [0] * G.num_flags
    for f, pos in enumerate(reference):
        inverse[pos] = f
    automorphisms = tuple(sorted(
        tuple(inverse[leaf[f]] for f in range(G.num_flags)) for leaf in best_leaves
    ))
    identity = tuple(range(G.num_flags))
    logger.debug(f"Canonical form of {G!r}: {len(best_leaves)} automorphisms")
    return CanonicalForm(best, reference, automorphisms, _generators(automorphisms, identity))


def brute_force_automorphisms(G: StableGraph, use_labels: bool = True) -> Tuple[Permutation, ...]:
    """
    Every flag permutation preserving the involution, vertex partition,
    genus and (optionally) leg labels, by direct search over vertex maps
    """
    V = G.num_vertices
    found = []
    for vmap in permutations(range(V)):
        if any(G.vertex_type(v) != G.vertex_type(vmap[v]) for v in range(V)):
            continue
        choices = [permutations(G.flags_at(vmap[v])) for v in range(V)]
        for images in product(*choices):
            perm = [0] * G.num_flags
            for v, image in enumerate(images):
                for f, target in zip(G.flags_at(v), image):
                    perm[f] = target
            if any(perm[G.involution[f]] != G.involution[perm[f]] for f in range(G.num_flags)):
                continue
            if use_labels and G.leg_label is not None and any(
                    G.leg_label[f] != G.leg_label[perm[f]] for f in G.legs):
                continue
            found.append(tuple(perm))
    return tuple(sorted(found))


def cycle_type(perm: Sequence[int], domain: Sequence[int]) -> Tuple[int, ...]:
    """Cycle type of a permutation restricted to an invariant subset"""
    seen = set()
    lengths = []
    for start in domain:
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def isomorphic(a: StableGraph, b: StableGraph, use_labels: bool = True) -> bool:
    return canonicalize(a, use_labels).certificate == canonicalize(b, use_labels).certificate
