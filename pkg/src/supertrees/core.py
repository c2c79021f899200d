"""k-uniform supertrees with boundary.

A supertree is a connected acyclic k-uniform hypergraph: every edge has
exactly k vertices and two edges share at most one vertex, so the vertex-edge
incidence graph is a tree. Degree-one vertices form the boundary; vertices of
degree at least two are interior. This module validates supertrees, computes
degree/level data, provides an exact canonical form for isomorphism tests,
and reads/writes the .sht text format.
"""

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BadVertexId,
    ContainsCycle,
    Disconnected,
    DuplicateEdge,
    EdgeOverlapTooLarge,
    InfeasibleDegreeSequence,
    NotKUniform,
    ShtFormatError,
)

__all__ = [
    "VertexId",
    "CanonicalCode",
    "Supertree",
    "BoundaryPartition",
    "DegreeSequence",
    "LevelStructure",
    "build_supertree",
    "boundary_partition",
    "degree_sequence",
    "distance",
    "level_structure",
    "canonical_code",
    "is_isomorphic",
    "apply_vertex_permutation",
    "parse_sht",
    "serialize_sht",
]

VertexId = int
CanonicalCode = bytes


@dataclass(frozen=True)
class Supertree:
    """A validated k-uniform supertree.

    Construct through :func:`build_supertree`, which performs the full
    validation pass; fields are assumed consistent everywhere else.
    Edges are stored as sorted k-tuples, sorted lexicographically.
    """

    k: int
    n: int
    edges: tuple[tuple[VertexId, ...], ...]
    degrees: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[VertexId, ...], ...]:
        """Neighbors of each vertex (vertices sharing at least one edge)."""
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            for v in e:
                nbrs[v].update(e)
        for v in range(self.n):
            nbrs[v].discard(v)
        return tuple(tuple(sorted(s)) for s in nbrs)


@dataclass(frozen=True)
class BoundaryPartition:
    """Interior/boundary split of vertices and edges."""

    interior: frozenset[VertexId]
    boundary: frozenset[VertexId]
    interior_edges: tuple[tuple[VertexId, ...], ...]
    boundary_edges: tuple[tuple[VertexId, ...], ...]


@dataclass(frozen=True)
class LevelStructure:
    """Breadth-first layers of a supertree seen from a root vertex.

    ``levels[i]`` lists the vertices at distance i from the root, ``depth[v]``
    is the layer index of v, ``a[i]`` the layer size and ``b[i]`` the sum of
    degrees over the layer. Every edge spans exactly two consecutive layers,
    with a single vertex on the shallow side.
    """

    root: VertexId
    levels: tuple[tuple[VertexId, ...], ...]
    depth: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    height: int


@dataclass(frozen=True)
class DegreeSequence:
    """Degree multiset of a supertree in canonical arrangement.

    ``entries`` holds the n0 interior degrees first, non-decreasing and each
    at least 2, followed by the unit degrees of the boundary vertices.
    Validation enforces the supertree counting identities: (n-1) must be a
    multiple of (k-1) and the entries must sum to k*(n-1)/(k-1). Sequences
    passing validation are exactly the ones realized by some supertree.
    """

    k: int
    entries: tuple[int, ...]
    n0: int

    def __post_init__(self):
        k, entries, n0 = self.k, self.entries, self.n0
        if k < 2:
            raise InfeasibleDegreeSequence(f"edge size must be at least 2, got k={k}")
        n = len(entries)
        if n == 0:
            raise InfeasibleDegreeSequence("empty degree sequence")
        if not 0 <= n0 <= n:
            raise InfeasibleDegreeSequence(f"interior count n0={n0} outside 0..{n}")
        for i, d in enumerate(entries):
            if i < n0:
                if d < 2:
                    raise InfeasibleDegreeSequence(
                        f"interior entry {d} at position {i} is below 2"
                    )
                if i and entries[i - 1] > d:
                    raise InfeasibleDegreeSequence(
                        "interior entries must be non-decreasing"
                    )
            elif d != 1:
                raise InfeasibleDegreeSequence(
                    f"entry {d} at position {i} should be a pendant degree 1"
                )
        if (n - 1) % (k - 1) != 0:
            raise InfeasibleDegreeSequence(
                f"(n-1) = {n - 1} is not a multiple of (k-1) = {k - 1}"
            )
        m = (n - 1) // (k - 1)
        if sum(entries) != k * m:
            raise InfeasibleDegreeSequence(
                f"degree sum {sum(entries)} != k*m = {k * m}"
            )
        if m >= 2 and n0 < 1:
            raise InfeasibleDegreeSequence(
                "a supertree with two or more edges has an interior vertex"
            )

    @classmethod
    def from_degrees(cls, k: int, degrees) -> "DegreeSequence":
        """Sort a raw degree multiset into canonical arrangement."""
        ds = sorted(degrees)
        if ds and ds[0] < 1:
            raise InfeasibleDegreeSequence(f"degree {ds[0]} is below 1")
        ones = [d for d in ds if d == 1]
        interior = [d for d in ds if d >= 2]
        return cls(k, tuple(interior) + tuple(ones), len(interior))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def m(self) -> int:
        return (self.n - 1) // (self.k - 1)

    @property
    def interior(self) -> tuple[int, ...]:
        return self.entries[: self.n0]

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.entries)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


def build_supertree(k: int, n: int, edges) -> Supertree:
    """Validate and construct a supertree.

    Args:
        k: edge size, at least 2.
        n: number of vertices; ids are 0..n-1.
        edges: iterable of k-sets of vertex ids.

    Raises:
        NotKUniform: an edge does not have exactly k distinct vertices.
        BadVertexId: a vertex id falls outside [0, n).
        DuplicateEdge: the same k-set appears twice.
        EdgeOverlapTooLarge: two edges share two or more vertices.
        ContainsCycle: the incidence graph contains a cycle.
        Disconnected: the hypergraph is not one component covering all ids.
    """
    if k < 2:
        raise NotKUniform(f"edge size must be at least 2, got k={k}")
    if n < 1:
        raise BadVertexId(f"vertex count must be positive, got n={n}")
    normalized = []
    for e in edges:
        t = tuple(sorted(e))
        if len(t) != k or len(set(t)) != k:
            raise NotKUniform(f"edge {t} does not have exactly {k} distinct vertices")
        if t[0] < 0 or t[-1] >= n:
            raise BadVertexId(f"edge {t} uses ids outside 0..{n - 1}")
        normalized.append(t)
    normalized.sort()
    for prev, cur in zip(normalized, normalized[1:]):
        if prev == cur:
            raise DuplicateEdge(f"edge {cur} appears twice")
    seen_pairs: set[tuple[int, int]] = set()
    for e in normalized:
        for pair in itertools.combinations(e, 2):
            if pair in seen_pairs:
                raise EdgeOverlapTooLarge(
                    f"vertices {pair[0]} and {pair[1]} share two edges"
                )
            seen_pairs.add(pair)
    uf = _UnionFind(n)
    for e in normalized:
        roots = {uf.find(v) for v in e}
        if len(roots) < k:
            # overlap-size-2 cases were caught above, so this is a longer cycle
            raise ContainsCycle(f"edge {e} closes a cycle")
        for v in e[1:]:
            uf.union(e[0], v)
    if not normalized:
        raise Disconnected("a supertree contains at least one edge")
    components = {uf.find(v) for v in range(n)}
    if len(components) > 1:
        raise Disconnected(f"{len(components)} components, expected 1")
    degrees = [0] * n
    for e in normalized:
        for v in e:
            degrees[v] += 1
    m = len(normalized)
    assert m * (k - 1) == n - 1, "connected acyclic counts are forced"
    return Supertree(k=k, n=n, edges=tuple(normalized), degrees=tuple(degrees))


def boundary_partition(G: Supertree) -> BoundaryPartition:
    """Split vertices into interior (degree >= 2) and boundary (degree 1),
    and edges into fully-interior edges and edges meeting the boundary."""
    interior = frozenset(v for v in range(G.n) if G.degrees[v] >= 2)
    boundary = frozenset(v for v in range(G.n) if G.degrees[v] == 1)
    interior_edges = tuple(e for e in G.edges if all(v in interior for v in e))
    boundary_edges = tuple(e for e in G.edges if any(v in boundary for v in e))
    return BoundaryPartition(interior, boundary, interior_edges, boundary_edges)


def degree_sequence(G: Supertree) -> DegreeSequence:
    return DegreeSequence.from_degrees(G.k, G.degrees)


def _bfs_depth(G: Supertree, root: VertexId) -> list[int]:
    depth = [-1] * G.n
    depth[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                queue.append(w)
    return depth


def distance(G: Supertree, u: VertexId, v: VertexId) -> int:
    """Minimum number of edges on a connecting path."""
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise BadVertexId(f"vertex pair ({u}, {v}) outside 0..{G.n - 1}")
    return _bfs_depth(G, u)[v]


def level_structure(G: Supertree, root: VertexId) -> LevelStructure:
    if not 0 <= root < G.n:
        raise BadVertexId(f"root {root} outside 0..{G.n - 1}")
    depth = _bfs_depth(G, root)
    height = max(depth)
    levels: list[list[int]] = [[] for _ in range(height + 1)]
    for v in range(G.n):
        levels[depth[v]].append(v)
    a = tuple(len(level) for level in levels)
    b = tuple(sum(G.degrees[v] for v in level) for level in levels)
    return LevelStructure(
        root=root,
        levels=tuple(tuple(level) for level in levels),
        depth=tuple(depth),
        a=a,
        b=b,
        height=height,
    )


# --- canonical form -------------------------------------------------------
#
# The incidence tree has one node per vertex and one per edge, linked by
# membership. Supertree isomorphism is exactly label-preserving isomorphism
# of these bipartite trees, so an AHU-style code rooted at the tree centroid
# (minimized over both centroids when there are two) is a complete invariant.


def _incidence_adjacency(G: Supertree) -> list[list[int]]:
    total = G.n + G.m
    adj: list[list[int]] = [[] for _ in range(total)]
    for ei, e in enumerate(G.edges):
        enode = G.n + ei
        for v in e:
            adj[v].append(enode)
            adj[enode].append(v)
    return adj


def _tree_centroids(adj: list[list[int]]) -> list[int]:
    total = len(adj)
    if total == 1:
        return [0]
    size = [1] * total
    order: list[int] = []
    parent = [-1] * total
    stack = [0]
    seen = [False] * total
    seen[0] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                stack.append(w)
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
    best = total + 1
    centroids: list[int] = []
    for u in range(total):
        heaviest = total - size[u]
        for w in adj[u]:
            if w != parent[u]:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best = heaviest
            centroids = [u]
        elif heaviest == best:
            centroids.append(u)
    return centroids


def _rooted_code(adj: list[list[int]], root: int, n_vertices: int) -> bytes:
    def code(u: int, parent: int) -> bytes:
        label = b"v" if u < n_vertices else b"e"
        children = sorted(code(w, u) for w in adj[u] if w != parent)
        return label + b"(" + b"".join(children) + b")"

    return code(root, -1)


def canonical_code(G: Supertree) -> CanonicalCode:
    """Byte string equal for two supertrees iff they are isomorphic."""
    adj = _incidence_adjacency(G)
    return min(_rooted_code(adj, c, G.n) for c in _tree_centroids(adj))


def is_isomorphic(G1: Supertree, G2: Supertree) -> bool:
    if G1.k != G2.k or G1.n != G2.n:
        return False
    return canonical_code(G1) == canonical_code(G2)


def apply_vertex_permutation(G: Supertree, perm) -> Supertree:
    """Relabel vertices: vertex v becomes perm[v]."""
    p = list(perm)
    if sorted(p) != list(range(G.n)):
        raise BadVertexId("perm is not a permutation of 0..n-1")
    return build_supertree(G.k, G.n, [[p[v] for v in e] for e in G.edges])


# --- .sht text format -----------------------------------------------------
#
#   k 3
#   n 7
#   e 0 1 2
#   e 0 3 4
#
# Lines starting with '#' are comments. Parsing tolerates arbitrary
# whitespace and skips trailing `order` metadata lines emitted by
# slo-construct; serialization is canonical (sorted ids, sorted edges).


def parse_sht(text: str) -> Supertree:
    k = n = None
    edges: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag, args = parts[0], parts[1:]
        if tag == "order":
            continue
        if tag not in ("k", "n", "e"):
            raise ShtFormatError(f"line {lineno}: unknown directive {tag!r}")
        try:
            values = [int(x) for x in args]
        except ValueError:
            raise ShtFormatError(f"line {lineno}: malformed {tag!r} line") from None
        if tag == "e":
            edges.append(values)
        elif len(values) != 1:
            raise ShtFormatError(f"line {lineno}: {tag!r} takes one integer")
        elif tag == "k":
            k = values[0]
        else:
            n = values[0]
    if k is None or n is None:
        raise ShtFormatError("missing required 'k' or 'n' line")
    return build_supertree(k, n, edges)


def serialize_sht(G: Supertree) -> str:
    lines = [f"k {G.k}", f"n {G.n}"]
    lines.extend("e " + " ".join(str(v) for v in e) for e in G.edges)
    return "\n".join(lines) + "\n"
