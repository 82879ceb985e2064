"""Simplicial graphs and the combinatorics the certificates are built on.

Vertices are identified by their position ``0..d-1``; labels are only for
display. Edges are stored as sorted pairs ``(i, j)`` with ``i < j``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import NotChordal, NotConnected


@dataclass(frozen=True)
class SimplicialGraph:
    """Finite simple undirected graph with positional vertices."""

    vertices: tuple[str, ...]
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        d = len(self.vertices)
        norm = set()
        for e in self.edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < d and 0 <= j < d):
                raise ValueError(f"edge {e} out of range for {d} vertices")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: Union[int, Sequence[str]], edges: Iterable) -> "SimplicialGraph":
        """Build from a vertex count (default labels v1..vd) or a label list."""
        labels = default_labels(n) if isinstance(n, int) else tuple(n)
        return cls(labels, frozenset(tuple(e) for e in edges))

    @property
    def d(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        adj = [set() for _ in range(self.d)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(a) for a in adj)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, i: int) -> frozenset:
        return self.adjacency[i]

    def induced(self, subset: Iterable[int]) -> "SimplicialGraph":
        """Induced subgraph on ``subset``, renumbered in increasing order."""
        keep = sorted(set(subset))
        pos = {v: k for k, v in enumerate(keep)}
        edges = [(pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos]
        return SimplicialGraph(tuple(self.vertices[v] for v in keep), frozenset(edges))

    def complement(self) -> "SimplicialGraph":
        edges = [e for e in itertools.combinations(range(self.d), 2) if e not in self.edges]
        return SimplicialGraph(self.vertices, frozenset(edges))

    def is_clique(self, subset: Iterable[int]) -> bool:
        return all(self.has_edge(i, j) for i, j in itertools.combinations(subset, 2))


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"v{i + 1}" for i in range(n))


# ---------------------------------------------------------------- builders

def complete_graph(n: int) -> SimplicialGraph:
    return SimplicialGraph.from_edges(n, itertools.combinations(range(n), 2))


def edgeless_graph(n: int) -> SimplicialGraph:
    return SimplicialGraph.from_edges(n, [])


def path_graph(n: int) -> SimplicialGraph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    return SimplicialGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimplicialGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimplicialGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> SimplicialGraph:
    """Centre 0 joined to ``k`` leaves."""
    return SimplicialGraph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def fan_graph(k: int) -> SimplicialGraph:
    """Apex 0 joined to every vertex of a path 1..k.

    ``fan_graph(4)`` is the five-vertex chordal graph made of three triangles
    glued along edges through the apex.
    """
    edges = [(0, i) for i in range(1, k + 1)] + [(i, i + 1) for i in range(1, k)]
    return SimplicialGraph.from_edges(k + 1, edges)


def ladder_graph(n: int) -> SimplicialGraph:
    """Row of ``n`` squares on ``2n + 2`` vertices.

    Even indices form the top row, odd indices the bottom row, and
    ``(2k, 2k + 1)`` are the rungs. Square ``k`` is ``{2k, 2k+1, 2k+2, 2k+3}``.
    """
    if n < 1:
        raise ValueError("ladder needs at least one square")
    edges = [(2 * k, 2 * k + 1) for k in range(n + 1)]
    edges += [(2 * k, 2 * k + 2) for k in range(n)]
    edges += [(2 * k + 1, 2 * k + 3) for k in range(n)]
    return SimplicialGraph.from_edges(2 * n + 2, edges)


def ladder_squares(n: int) -> list[tuple[int, int, int, int]]:
    return [(2 * k, 2 * k + 1, 2 * k + 2, 2 * k + 3) for k in range(n)]


def disjoint_union(g: SimplicialGraph, h: SimplicialGraph) -> SimplicialGraph:
    off = g.d
    edges = list(g.edges) + [(i + off, j + off) for i, j in h.edges]
    return SimplicialGraph(g.vertices + h.vertices, frozenset(edges))


def join(g: SimplicialGraph, h: SimplicialGraph) -> SimplicialGraph:
    """Disjoint union plus every edge between the two parts."""
    u = disjoint_union(g, h)
    cross = [(i, g.d + j) for i in range(g.d) for j in range(h.d)]
    return SimplicialGraph(u.vertices, u.edges | frozenset(cross))


# ------------------------------------------------------------ basic queries

def connected_components(g: SimplicialGraph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex.

    With ``within`` the search is restricted to that vertex subset (the
    components of the induced subgraph, in original numbering).
    """
    allowed = set(range(g.d)) if within is None else set(within)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def num_components(g: SimplicialGraph, within: Iterable[int] | None = None) -> int:
    return len(connected_components(g, within))


def enumerate_cliques(g: SimplicialGraph, n: int) -> list[tuple[int, ...]]:
    """All ``n``-cliques as sorted tuples, in lexicographic order.

    ``n = 0`` gives the single empty clique.
    """
    if n < 0:
        raise ValueError("clique size must be non-negative")
    out: list[tuple[int, ...]] = []
    adj = g.adjacency

    def extend(clique: list[int], cands: list[int]):
        if len(clique) == n:
            out.append(tuple(clique))
            return
        for k, v in enumerate(cands):
            if len(clique) + 1 + (len(cands) - k - 1) < n:
                break
            clique.append(v)
            extend(clique, [w for w in cands[k + 1:] if w in adj[v]])
            clique.pop()

    extend([], list(range(g.d)))
    return out


def clique_number(g: SimplicialGraph) -> int:
    k = 0
    while enumerate_cliques(g, k + 1):
        k += 1
    return k


def clique_census(g: SimplicialGraph, up_to: int | None = None) -> tuple[int, ...]:
    """Number of n-cliques for n = 0..up_to (default: the clique number)."""
    top = clique_number(g) if up_to is None else up_to
    return tuple(len(enumerate_cliques(g, n)) for n in range(top + 1))


def _shortest_path(g: SimplicialGraph, src: int, dst: int, allowed: set[int]) -> list[int] | None:
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = []
            while u is not None:
                path.append(u)
                u = prev[u]
            return path[::-1]
        for w in g.adjacency[u]:
            if w in allowed and w not in prev:
                prev[w] = u
                queue.append(w)
    return None


def is_induced_cycle(g: SimplicialGraph, cycle: Sequence[int]) -> bool:
    """True if ``cycle`` (in cyclic order, length >= 4) is a chordless cycle of g."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b == a + 1 or (a == 0 and b == k - 1)
            if g.has_edge(cycle[a], cycle[b]) != consecutive:
                return False
    return True


# ---------------------------------------------------------------- chordality

@dataclass(frozen=True)
class PerfectEliminationOrder:
    """Vertex order in which each vertex's later neighbours form a clique."""

    order: tuple[int, ...]


@dataclass(frozen=True)
class ForbiddenWitness:
    """Induced subgraph certifying failure of a forbidden-subgraph test.

    ``kind`` is ``"cycle"`` (vertices in cyclic order), ``"C4"`` or ``"L3"``
    (for L3 the vertices are listed along the path).
    """

    kind: str
    vertices: tuple[int, ...]


def maximum_cardinality_search(g: SimplicialGraph) -> list[int]:
    """Visit order of maximum cardinality search (ties: smallest index)."""
    weight = [0] * g.d
    visited = [False] * g.d
    order = []
    for _ in range(g.d):
        v = max((u for u in range(g.d) if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        order.append(v)
        for w in g.adjacency[v]:
            if not visited[w]:
                weight[w] += 1
    return order


def _peo_violation(g: SimplicialGraph, order: Sequence[int]):
    """First (v, u, w) where u, w are later neighbours of v but not adjacent."""
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adjacency[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        for w in sorted(later, key=pos.__getitem__):
            if w != u and not g.has_edge(u, w):
                return v, u, w
    return None


def is_perfect_elimination_order(g: SimplicialGraph, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(g.d)):
        return False
    pos = {v: k for k, v in enumerate(order)}
    return all(
        g.is_clique([w for w in g.adjacency[v] if pos[w] > pos[v]]) for v in order
    )


def _cycle_through(g: SimplicialGraph, v: int, u: int, w: int) -> list[int] | None:
    """Chordless cycle v-u-...-w-v, if one exists, for non-adjacent u, w in N(v)."""
    blocked = (g.adjacency[v] | {v}) - {u, w}
    path = _shortest_path(g, u, w, set(range(g.d)) - blocked)
    if path is None:
        return None
    return [v] + path


def chordal_certificate(g: SimplicialGraph) -> Union[PerfectEliminationOrder, ForbiddenWitness]:
    """PEO from maximum cardinality search, or a chordless cycle of length >= 4."""
    peo = maximum_cardinality_search(g)[::-1]
    bad = _peo_violation(g, peo)
    if bad is None:
        return PerfectEliminationOrder(tuple(peo))
    cycle = _cycle_through(g, *bad)
    if cycle is None:
        # the violating triple need not sit on a chordless cycle itself; some
        # vertex of any chordless cycle does, with its two cycle neighbours
        for v in range(g.d):
            for u, w in itertools.combinations(sorted(g.adjacency[v]), 2):
                if not g.has_edge(u, w):
                    cycle = _cycle_through(g, v, u, w)
                    if cycle is not None:
                        break
            if cycle is not None:
                break
    assert cycle is not None and is_induced_cycle(g, cycle)
    return ForbiddenWitness("cycle", tuple(cycle))


def is_chordal(g: SimplicialGraph) -> bool:
    return isinstance(chordal_certificate(g), PerfectEliminationOrder)


# ------------------------------------------------------------ pasting trees

@dataclass(frozen=True)
class Leaf:
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class Paste:
    left: "PastingTree"
    right: "PastingTree"
    shared: tuple[int, ...]


PastingTree = Union[Leaf, Paste]


def tree_vertices(tree: PastingTree) -> tuple[int, ...]:
    if isinstance(tree, Leaf):
        return tree.vertices
    return tuple(sorted(set(tree_vertices(tree.left)) | set(tree_vertices(tree.right))))


def tree_leaves(tree: PastingTree) -> list[tuple[int, ...]]:
    """Leaf cliques, left to right."""
    if isinstance(tree, Leaf):
        return [tree.vertices]
    return tree_leaves(tree.left) + tree_leaves(tree.right)


def flatten_tree(tree: PastingTree) -> tuple[set[int], set[tuple[int, int]]]:
    """Vertex and edge sets obtained by gluing the leaf cliques."""
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for leaf in tree_leaves(tree):
        verts.update(leaf)
        edges.update(itertools.combinations(leaf, 2))
    return verts, edges


def _clique_separator(g: SimplicialGraph, vertices: list[int]):
    sub = set(vertices)
    for size in range(1, len(vertices) - 1):
        for cand in itertools.combinations(vertices, size):
            if not g.is_clique(cand):
                continue
            comps = connected_components(g, sub - set(cand))
            if len(comps) > 1:
                return cand, comps
    return None


def _pasting(g: SimplicialGraph, vertices: list[int]) -> PastingTree:
    if g.is_clique(vertices):
        return Leaf(tuple(vertices))
    found = _clique_separator(g, vertices)
    assert found is not None, "connected chordal graphs have clique separators"
    sep, comps = found
    left = sorted(set(sep) | set(comps[0]))
    right = sorted(set(sep).union(*comps[1:]))
    return Paste(_pasting(g, left), _pasting(g, right), tuple(sep))


def chordal_pasting_tree(g: SimplicialGraph) -> PastingTree:
    """Decompose a connected chordal graph into cliques glued along cliques.

    Each step splits at a smallest clique separator (lexicographically first
    among those of minimum size); the left part holds the component of the
    smallest remaining vertex.
    """
    if g.d == 0 or num_components(g) != 1:
        raise NotConnected("pasting trees are defined for connected graphs")
    cert = chordal_certificate(g)
    if isinstance(cert, ForbiddenWitness):
        raise NotChordal(cert)
    return _pasting(g, list(range(g.d)))


# ----------------------------------------------------------- elementary type

def induced_four_shape(g: SimplicialGraph, quad: Sequence[int]):
    """Classify an induced 4-vertex subgraph as C4, L3 (with path order) or None."""
    edges = [(a, b) for a, b in itertools.combinations(quad, 2) if g.has_edge(a, b)]
    if len(edges) not in (3, 4):
        return None
    deg = {v: 0 for v in quad}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    if len(edges) == 4 and all(x == 2 for x in deg.values()):
        start = quad[0]
        cyc = [start]
        while len(cyc) < 4:
            nxt = min(w for w in quad if g.has_edge(cyc[-1], w) and w not in cyc)
            cyc.append(nxt)
        return "C4", tuple(cyc)
    if len(edges) == 3 and sorted(deg.values()) == [1, 1, 2, 2]:
        start = min(v for v in quad if deg[v] == 1)
        path = [start]
        while len(path) < 4:
            path.append(next(w for w in quad if g.has_edge(path[-1], w) and w not in path))
        return "L3", tuple(path)
    return None


def is_elementary_type(g: SimplicialGraph) -> Union[bool, ForbiddenWitness]:
    """True if no induced C4 or L3 (path on 4 vertices), else the first witness.

    4-subsets are scanned in lexicographic order.
    """
    for quad in itertools.combinations(range(g.d), 4):
        shape = induced_four_shape(g, quad)
        if shape is not None:
            return ForbiddenWitness(*shape)
    return True


def is_induced_square(g: SimplicialGraph, quad: Sequence[int]) -> bool:
    shape = induced_four_shape(g, quad)
    return shape is not None and shape[0] == "C4"


@dataclass(frozen=True)
class SquareCensus:
    q: int
    lhs: int  # |E| - d + r
    holds: bool


def subsquare_census(g: SimplicialGraph) -> SquareCensus:
    """Count induced 4-cycles and compare with |E| - d + r."""
    q = sum(is_induced_square(g, quad) for quad in itertools.combinations(range(g.d), 4))
    lhs = g.num_edges - g.d + num_components(g)
    return SquareCensus(q, lhs, q == lhs)


# --------------------------------------------------------------- embeddings

def find_induced_embedding(g: SimplicialGraph, h: SimplicialGraph) -> tuple[int, ...] | None:
    """Injective map V(g) -> V(h) preserving adjacency and non-adjacency."""
    if g.d > h.d:
        return None
    # place vertices in BFS order so that neighbours constrain early
    order: list[int] = []
    for comp in connected_components(g):
        for v in _bfs_order(g, comp[0]):
            order.append(v)
    image = [-1] * g.d
    used = [False] * h.d
    hdeg = [len(a) for a in h.adjacency]

    def place(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        placed_nbrs = [image[u] for u in g.adjacency[v] if image[u] >= 0]
        cands = h.adjacency[placed_nbrs[0]] if placed_nbrs else range(h.d)
        for x in sorted(cands):
            if used[x] or hdeg[x] < len(g.adjacency[v]):
                continue
            ok = True
            for u in order[:k]:
                if g.has_edge(u, v) != h.has_edge(image[u], x):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = x
            used[x] = True
            if place(k + 1):
                return True
            image[v] = -1
            used[x] = False
        return False

    return tuple(image) if place(0) else None


def _bfs_order(g: SimplicialGraph, s: int) -> list[int]:
    seen = {s}
    out = [s]
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in sorted(g.adjacency[u]):
            if w not in seen:
                seen.add(w)
                out.append(w)
                queue.append(w)
    return out


def embed_in_ladder(g: SimplicialGraph, n: int) -> tuple[int, ...] | None:
    """Induced embedding of g into the ladder with ``n`` squares, or None."""
    return find_induced_embedding(g, ladder_graph(n))


def ladder_embedding(g: SimplicialGraph) -> tuple[int, tuple[int, ...]] | None:
    """Smallest ladder admitting an induced embedding of g, with the map."""
    if g.d == 0:
        return None
    for n in range(max(1, (g.d + 1) // 2 - 1), max(1, g.d) + 1):
        emb = embed_in_ladder(g, n)
        if emb is not None:
            return n, emb
    return None


def is_ladder(g: SimplicialGraph) -> tuple[int, tuple[int, ...]] | None:
    """If g is isomorphic to a full ladder, return (n, isomorphism onto it)."""
    if g.d < 4 or g.d % 2:
        return None
    n = g.d // 2 - 1
    if g.num_edges != 3 * n + 1:
        return None
    emb = embed_in_ladder(g, n)
    return None if emb is None else (n, emb)


def complete_join_decomposition(g: SimplicialGraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Split g as a join g1 * g2 using components of the complement.

    ``g1`` is a smallest complement component (ties: smallest vertex) and
    ``g2`` is everything else. Returns None when the complement is connected.
    """
    if g.d < 2:
        return None
    comps = connected_components(g.complement())
    if len(comps) < 2:
        return None
    first = min(comps, key=lambda c: (len(c), c[0]))
    rest = sorted(v for c in comps if c is not first for v in c)
    return tuple(first), tuple(rest)
